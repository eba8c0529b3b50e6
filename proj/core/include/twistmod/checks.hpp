#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "twistmod/delta.hpp"
#include "twistmod/mode_table.hpp"
#include "twistmod/twisted_module.hpp"
#include "twistmod/vertex_operator.hpp"

namespace twistmod {

enum class CheckStatus { Pass, Fail, Uncertifiable };

std::string_view check_status_name(CheckStatus s);

/// Offending comparison: inputs, position in the series and both coefficient values.
struct Witness {
    std::string v;
    std::string w;
    std::string exponent;
    int log_power = 0;
    std::string expected;
    std::string actual;
    std::string detail;
};

struct CheckReport {
    std::string name;
    std::map<std::string, std::string> parameters;
    CheckStatus status = CheckStatus::Pass;
    std::optional<Witness> witness;
    long comparisons = 0;
    std::vector<std::string> notes;

    [[nodiscard]] bool passed() const { return status == CheckStatus::Pass; }
    /// Records the first failure only.
    void fail(Witness w);
    void uncertifiable(const std::string& why);
};

/// Finite range over which a check is exhaustive.
struct CheckRange {
    int max_weight = 3;             // test vectors w: PBW depth <= max_weight
    int max_generator_weight = 1;   // test vectors v: PBW depth <= this (generators: 1)
    int max_output_weight = 4;      // conjugation check: x_2-coefficients up to this output depth
    Rational lo = Rational(-6);     // exponent window
    Rational hi = Rational(2);
    int mode_range = 3;             // |m| <= mode_range for mode tables / commutators
};

/// Basis vectors of depth <= max (as PBW vectors).
std::vector<PBWVector> basis_vectors(const InducedModule& m, int max_depth);
/// b(-1)1 for every Chevalley basis element b, in basis order.
std::vector<PBWVector> generator_vectors(const InducedModule& vacuum);

// ---- Delta identities (on the vacuum module) ----

/// Delta(x)w is a finite log-polynomial; reports the exponent range and max log power.
CheckReport check_delta_finite(const DeltaOperator& d, const CheckRange& r);
/// Delta(x) Y(v, x2) = Y(Delta(x + x2) v, x2) Delta(x), per x2-coefficient.
CheckReport check_delta_conjugation(const DeltaOperator& d, const CheckRange& r);
/// [L(0), Delta(x)] = x d/dx Delta(x) + Y_0(u) Delta(x).
CheckReport check_delta_l0(const DeltaOperator& d, const CheckRange& r);
/// [L(-1), Delta(x)] = -d/dx Delta(x).
CheckReport check_delta_l_minus_1(const DeltaOperator& d, const CheckRange& r);
/// Delta^(0) = 1.
CheckReport check_delta_zero(const InducedModulePtr& vacuum, const CheckRange& r);
/// Delta^(u) Delta^(-u) = 1 = Delta^(-u) Delta^(u).
CheckReport check_delta_inverse(const InducedModulePtr& vacuum, const LieElt& a, const CheckRange& r);
/// Delta^(s+n) = Delta^(s) Delta^(n) = Delta^(n) Delta^(s) for the Jordan-Chevalley parts of a;
/// (s, n) = 0 and [s, n] = 0 are asserted first.
CheckReport check_delta_additivity(const InducedModulePtr& vacuum, const LieElt& a, const CheckRange& r);
/// g Delta(x) = Delta(x) g for the automorphism g of `module` (which must fix u).
CheckReport check_delta_g_commutation(const TwistedModule& module, const DeltaOperator& d, const CheckRange& r);
/// All of the above for u = a(-1)1 (g taken from `module`).
std::vector<CheckReport> check_delta_identities(const TwistedModule& module, const LieElt& a, const CheckRange& r,
                                                DeltaConvention conv = DeltaConvention::Corrected);

// ---- twisted-module axioms ----

/// Y^{g;p+1}(gv, z)w = Y^{g;p}(v, z)w via exact branch shifts, p in {-1, 0, 1}.
CheckReport check_equivariance(const TwistedModule& module, const CheckRange& r);
/// [a(m), b(n)] = [a,b](m+n) + m (a,b) l delta_{m+n,0}, for a, b eigenvectors of the
/// semisimple twist data. Also compares both sides with the closed-form table oracle.
/// Throws Unsupported for twists with log terms.
CheckReport check_commutator(const TwistedModule& module, const LieElt& a, const LieElt& b, const CheckRange& r);
/// identity, lower truncation, L(-1)-derivative, L(0)-grading (K), g-grading (Lambda).
std::vector<CheckReport> check_axioms(const TwistedModule& module, const CheckRange& r);
/// Closed-form mode table vs the Delta-series route for every Chevalley generator.
CheckReport check_mode_table_oracle(const TwistedModule& module, const CheckRange& r);
/// Y^g(b(-n-1)1, x) from the reconstruction vs (1/n!) d^n/dx^n of the closed-form table.
CheckReport check_derivative_table(const TwistedModule& module, int n, const CheckRange& r);
/// L^{g g_u}(0) = L^g(0) - (Y^g)_0(u) + kappa/2 on all basis vectors (module must be an inner step).
CheckReport check_l0_shift(const TwistedModule& module, const CheckRange& r);
/// make_twisted(make_twisted(M, a), -a) has the same vertex operators as M.
CheckReport check_involution(const TwistedModulePtr& module, const LieElt& a, const CheckRange& r);
/// make_twisted(M, s + n) = make_twisted(make_twisted(M, s), n).
CheckReport check_chain_additivity(const TwistedModulePtr& module, const LieElt& a, const CheckRange& r);
/// Y(v, x) maps class c' into class c + c' for generators v of class c.
CheckReport check_bigrading_compatibility(const TwistedModule& module, const CheckRange& r);
/// Grading-restriction / strongly-graded scan: counterexample families b(-m)^k top with
/// constant (weight, class), confirmed by the L(0) series route for k <= kmax.
CheckReport check_grading_restriction(const TwistedModule& module, int kmax);
/// Submodules generated by the seeds (within the cutoff) coincide before and after twisting.
CheckReport check_submodule_transport(const TwistedModule& before, const TwistedModule& after,
                                      const std::vector<PBWVector>& seeds, const CheckRange& r);

// ---- functor on maps ----

/// Linear map W_1 -> W_2 between the underlying spaces.
struct ModuleMap {
    std::string name;
    std::function<PBWVector(const PBWVector&)> apply;
};

/// f Y_1(v, x) = Y_2(v, x) f on generators and basis vectors; nullopt or the first witness.
std::optional<Witness> find_intertwining_failure(const TwistedModule& m1, const TwistedModule& m2, const ModuleMap& f,
                                                 const CheckRange& r);
/// Throws NotIntertwining when f is not a map of the base modules; otherwise re-certifies f
/// for the Delta^u-twisted modules and checks Delta^u Delta^{-u} = identity on objects and f.
CheckReport check_functor(const TwistedModulePtr& m1, const TwistedModulePtr& m2, const ModuleMap& f,
                          const LieElt& a, const CheckRange& r);

}  // namespace twistmod
