#pragma once

#include <string>
#include <vector>

#include "qsv/expr.hpp"
#include "qsv/theta.hpp"

namespace qsv {

enum class MockName { A2, mu2, f3, omega3, psi3, chi3, phi10, psi10, X10, chi10, f0, f1 };
enum class MockForm { eulerian, appell };

/// Parses names such as "f3", "omega3", "mu2", "X10"; throws UnknownName.
MockName parse_mock_name(const std::string& name);
std::string to_string(MockName n);
std::vector<MockName> all_mock_names();
/// Whether `form` exists for `n`; tenth-order functions have only the Eulerian form.
bool has_form(MockName n, MockForm form);

/// The named function as a series; throws FormUnavailable for a missing form.
QZSeries mock_theta(MockName n, MockForm form, const Exponent& trunc);
/// g_3(q^a; q^b) for 0 < a < b.
QZSeries g3(long a, long b, const Exponent& trunc);

namespace ex {
Expr mock(MockName n, MockForm form = MockForm::eulerian);
/// Second Appell-side expression where the paper displays two (f3, omega3).
Expr mock_alt(MockName n);
Expr g3(long a, long b);
}  // namespace ex

/// The three classical third-order identities and the level-2/3 Appell propositions.
std::vector<IdentityInstance> classical_third_order_instances();
std::vector<IdentityResult> classical_third_order_suite(const Exponent& trunc);

}  // namespace qsv
