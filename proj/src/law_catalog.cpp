#include "monadic/law_catalog.hpp"

#include <algorithm>
#include <future>

#include "json.hpp"

namespace monadic {

namespace {

constexpr std::array kCatalog{
    laws::functor_id,          laws::functor_comp,        laws::join_left_unit,
    laws::join_right_unit,     laws::join_associativity,  laws::bind_left_neutral,
    laws::bind_right_neutral,  laws::bind_associative,    laws::fail_left_zero,
    laws::fail_right_zero,     laws::alt_associative,     laws::alt_left_distributive,
    laws::nondet_altfailm,     laws::nondet_altmfail,     laws::altci_idempotent,
    laws::altci_commutative,   laws::plus_right_distributive, laws::except_catchmfail,
    laws::except_catchfailm,   laws::except_catcha,       laws::except_catchret,
    laws::state_putput,        laws::state_putget,        laws::state_getputskip,
    laws::state_getget,        laws::array_aputput,       laws::array_aputget,
    laws::array_agetputskip,   laws::array_agetget,       laws::array_agetc,
    laws::array_aputc,         laws::array_aputgetc,      laws::convex_choice1,
    laws::convex_choicec,      laws::convex_choicemm,     laws::convex_choicea,
    laws::prob_choice_bind_dl, laws::morphism_ret,        laws::morphism_bind,
    laws::morphism_naturality, laws::store_cputput,       laws::store_cputget,
    laws::store_cgetget,       laws::store_cgetc,         laws::store_cgetputskip,
    laws::store_cputc,         laws::store_cputgetc,      laws::store_cgetputc,
    laws::store_cnewget,       laws::store_cnewput,       laws::store_cnewchk,
    laws::store_cchknewc,      laws::store_cchknewe,      laws::store_cchkputc,
    laws::store_cgetputchk,    laws::fastprod_example,       laws::rtl_tl_self,
};

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

std::span<const LawId> all_laws() { return kCatalog; }

std::optional<LawId> find_law(std::string_view name) {
  auto it = std::find_if(kCatalog.begin(), kCatalog.end(), [name](const LawId& l) { return l.name == name; });
  if (it == kCatalog.end()) return std::nullopt;
  return *it;
}

std::uint64_t instance_seed(std::uint64_t seed, std::string_view law, std::string_view model) {
  return splitmix64(seed ^ splitmix64(fnv1a(law) ^ (fnv1a(model) << 1)));
}

Domain<int> naturals(int max) {
  Domain<int> d;
  d.enumerate = [max](std::size_t bound) {
    std::vector<int> out;
    const int top = std::min<long long>(max, static_cast<long long>(bound));
    for (int k = 0; k <= top; ++k) out.push_back(k);
    return out;
  };
  d.sample = [max](Rng& rng) { return static_cast<int>(pick(rng, static_cast<std::size_t>(max) + 1)); };
  return d;
}

Domain<std::size_t> indices(std::size_t max) {
  Domain<std::size_t> d;
  d.enumerate = [max](std::size_t bound) {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k <= std::min(max, bound); ++k) out.push_back(k);
    return out;
  };
  d.sample = [max](Rng& rng) { return pick(rng, max + 1); };
  return d;
}

Domain<std::vector<int>> lists(int low, int high, std::size_t max_len) {
  Domain<std::vector<int>> d;
  const auto width = static_cast<std::size_t>(high - low + 1);
  d.enumerate = [=](std::size_t bound) {
    std::vector<std::vector<int>> out{{}};
    std::vector<std::vector<int>> layer{{}};
    for (std::size_t len = 1; len <= std::min(bound, max_len); ++len) {
      std::vector<std::vector<int>> next;
      for (const auto& prefix : layer) {
        for (int v = low; v <= high; ++v) {
          auto xs = prefix;
          xs.push_back(v);
          next.push_back(std::move(xs));
        }
      }
      out.insert(out.end(), next.begin(), next.end());
      layer = std::move(next);
    }
    return out;
  };
  d.sample = [=](Rng& rng) {
    std::vector<int> xs(pick(rng, max_len + 1));
    for (auto& x : xs) x = low + static_cast<int>(pick(rng, width));
    return xs;
  };
  return d;
}

UnsupportedLaw::UnsupportedLaw(std::string_view law, std::string_view model)
    : std::runtime_error("model '" + std::string(model) + "' does not provide the operations required by law '" +
                         std::string(law) + "'") {}

void ModelHandle::add(const LawId& law, Check check) { checks_.emplace_back(law, std::move(check)); }

bool ModelHandle::supports(std::string_view law) const {
  return std::any_of(checks_.begin(), checks_.end(), [law](const auto& c) { return c.first.name == law; });
}

std::vector<LawId> ModelHandle::laws() const {
  std::vector<LawId> out;
  for (const auto& [law, check] : checks_) out.push_back(law);
  return out;
}

LawReport ModelHandle::check(const LawId& law, const CheckConfig& cfg) const {
  for (const auto& [id, run] : checks_) {
    if (id.name == law.name) return run(cfg);
  }
  throw UnsupportedLaw(law.name, name_);
}

std::vector<LawReport> check_law_suite(std::span<const LawId> suite, const ModelHandle& model,
                                       const CheckConfig& cfg, unsigned jobs) {
  for (const auto& law : suite) {
    if (!model.supports(law.name)) throw UnsupportedLaw(law.name, model.name());
  }
  std::vector<LawReport> out;
  out.reserve(suite.size());
  if (jobs <= 1) {
    for (const auto& law : suite) out.push_back(model.check(law, cfg));
    return out;
  }
  for (std::size_t start = 0; start < suite.size(); start += jobs) {
    std::vector<std::future<LawReport>> batch;
    for (std::size_t k = start; k < std::min(suite.size(), start + jobs); ++k) {
      batch.push_back(std::async(std::launch::async, [&model, &cfg, law = suite[k]] { return model.check(law, cfg); }));
    }
    for (auto& f : batch) out.push_back(f.get());
  }
  return out;
}

std::vector<LawReport> check_all(const ModelHandle& model, const CheckConfig& cfg, unsigned jobs) {
  auto suite = model.laws();
  return check_law_suite(suite, model, cfg, jobs);
}

std::string render_text(const LawReport& r) {
  std::string line = std::string(r.passed() ? "PASS " : "FAIL ") + std::string(r.law.name) + " [" + r.model +
                     "] instances=" + std::to_string(r.instances) + " skipped=" + std::to_string(r.skipped) +
                     " source=\"" + std::string(r.law.source) + "\"";
  if (r.counterexample) {
    line += "\n  counterexample: " + r.counterexample->instance;
    line += "\n  lhs: " + r.counterexample->lhs;
    line += "\n  rhs: " + r.counterexample->rhs;
  }
  return line;
}

std::string render_text(std::span<const LawReport> reports) {
  std::string out;
  for (const auto& r : reports) out += render_text(r) + "\n";
  return out;
}

std::string render_json(std::span<const LawReport> reports) {
  auto doc = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    nlohmann::ordered_json rec;
    rec["law"] = r.law.name;
    rec["model"] = r.model;
    rec["source"] = r.law.source;
    rec["instances"] = r.instances;
    rec["skipped"] = r.skipped;
    rec["status"] = r.passed() ? "pass" : "fail";
    if (r.counterexample) {
      rec["counterexample"] = {{"instance", r.counterexample->instance},
                               {"lhs", r.counterexample->lhs},
                               {"rhs", r.counterexample->rhs}};
    }
    doc.push_back(std::move(rec));
  }
  return doc.dump(2) + "\n";
}

bool all_passed(std::span<const LawReport> reports) {
  return std::all_of(reports.begin(), reports.end(), [](const LawReport& r) { return r.passed(); });
}

std::string show(bool b) { return b ? "true" : "false"; }
std::string show(int n) { return std::to_string(n); }
std::string show(long n) { return std::to_string(n); }
std::string show(long long n) { return std::to_string(n); }
std::string show(unsigned n) { return std::to_string(n); }
std::string show(unsigned long n) { return std::to_string(n); }
std::string show(unsigned long long n) { return std::to_string(n); }
std::string show(const std::string& s) { return s; }
std::string show(Unit) { return "tt"; }

}  // namespace monadic
