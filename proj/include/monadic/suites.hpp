#pragma once

// Named law suites: which laws are checked against which models.

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "monadic/generic_laws.hpp"
#include "monadic/law_catalog.hpp"
#include "monadic/state_array.hpp"
#include "monadic/transformers.hpp"

namespace monadic {

class UnknownSuite : public std::invalid_argument {
 public:
  explicit UnknownSuite(const std::string& name) : std::invalid_argument("unknown suite '" + name + "'") {}
};

/// A model handle and the laws of a suite to check against it.
struct SuiteEntry {
  ModelHandle handle;
  std::vector<LawId> laws;
};

/// functor, monad, fail, alt, nondet, plus, except, state, array,
/// plus-array, morphism, convex, prob, typed-store, and all.
const std::vector<std::string>& suite_names();
bool is_suite(std::string_view name);

/// Throws UnknownSuite for names not in suite_names().
std::vector<SuiteEntry> build_suite(const std::string& name);

/// Runs every entry of the suite in order.
std::vector<LawReport> run_suite(const std::string& name, const CheckConfig& cfg, unsigned jobs = 1);

// Models and fixtures used by the suites.

using IdState = StateT<int, Identity>;
using OptionState = StateT<int, Option>;
using PowersetState = StateT<int, Powerset>;

/// Integer states 0..3.
std::vector<int> int_states();
IdState make_id_state();
OptionState make_option_state();
PowersetState make_powerset_state();

Domain<Named<std::function<int(int)>>> int_funcs();

Fixture<Powerset> powerset_fixture();
Fixture<Syntax> syntax_fixture();
Fixture<Option> option_fixture();
Fixture<Except> except_fixture();
Fixture<Identity> identity_fixture();
Fixture<IdState> id_state_fixture();
Fixture<OptionState> option_state_fixture();
Fixture<PowersetState> powerset_state_fixture();
Fixture<PureArray> pure_array_fixture(int def);
Fixture<PlusArray> plus_array_fixture(int def);

/// Morphism laws of liftS over the identity, option and powerset bases,
/// and of the identity morphism on the powerset monad.
std::vector<SuiteEntry> morphism_entries();

}  // namespace monadic
