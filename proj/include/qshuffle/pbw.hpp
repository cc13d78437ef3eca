/**
 * @file pbw.hpp
 * @brief PBW-type root vectors realized inside the q-shuffle superalgebra.
 *
 * The positive part embeds into the shuffle superalgebra by sending the two
 * generators to the letters x and y; under that embedding the root vectors
 * become concrete elements that can be computed both recursively and in
 * closed form through the Catalan elements.
 *
 * Recursions (all products are super shuffle products):
 *   E_{alpha0} = x,  E_{alpha1} = y,  E_delta = q^-2 (y*x) + x*y
 *   E_{n delta + alpha0} = (E_{(n-1) delta + alpha0} * E_delta
 *                           - E_delta * E_{(n-1) delta + alpha0}) / (q - q^-1)
 *   E_{n delta + alpha1} = (E_delta * E_{(n-1) delta + alpha1}
 *                           - E_{(n-1) delta + alpha1} * E_delta) / (q - q^-1)
 *   E_{n delta} = q^-2 (E_{(n-1) delta + alpha1} * x) + x * E_{(n-1) delta + alpha1}
 *
 * The real-root brackets are plain commutators: the real roots are odd,
 * the imaginary roots even, so the super sign (-1)^{parity*parity} is +1.
 */
#pragma once

#include "qshuffle/catalan.hpp"

#include <map>
#include <span>
#include <stdexcept>
#include <vector>

namespace qshuffle {

/// The four root-vector families, indexed by n.
/// real0[n], real1[n] live in degree 2n+1; imag[n], imag_beck[n] in degree 2n
/// (index 0 of the imaginary families is unused).
struct RootVectorSet {
    std::vector<FreeElement> real0;      // E_{n delta + alpha0}
    std::vector<FreeElement> real1;      // E_{n delta + alpha1}
    std::vector<FreeElement> imag;       // E_{n delta}
    std::vector<FreeElement> imag_beck;  // E^B_{n delta}
};

/// Root vectors of Damiani type up to index n_max (Beck part left empty).
/// Throws NotDivisibleError if a commutator fails to divide by q - q^-1,
/// which would signal an inconsistent recursion.
inline RootVectorSet damiani_generators(int n_max, Shuffler& sh) {
    if (n_max < 0) throw std::invalid_argument("damiani_generators: n_max must be >= 0");
    if (2 * n_max + 1 > word_cap()) throw CapExceededError(2 * n_max + 1);
    RootVectorSet rv;
    const FreeElement x = FreeElement::of_letter(Letter::X);
    const FreeElement y = FreeElement::of_letter(Letter::Y);
    rv.real0.push_back(x);
    rv.real1.push_back(y);
    const FreeElement e_delta =
        sh.shuffle_elems(y, x).scaled(LaurentPoly::q(-2)) + sh.shuffle_elems(x, y);
    rv.imag.push_back(FreeElement::zero());  // no E_{0 delta}
    if (n_max >= 1) rv.imag.push_back(e_delta);
    for (int n = 1; n <= n_max; ++n) {
        const FreeElement& r0 = rv.real0[n - 1];
        const FreeElement& r1 = rv.real1[n - 1];
        rv.real0.push_back((sh.shuffle_elems(r0, e_delta) - sh.shuffle_elems(e_delta, r0))
                               .divided(q_minus_qinv()));
        rv.real1.push_back((sh.shuffle_elems(e_delta, r1) - sh.shuffle_elems(r1, e_delta))
                               .divided(q_minus_qinv()));
        if (n >= 2)
            rv.imag.push_back(sh.shuffle_elems(rv.real1[n - 1], x).scaled(LaurentPoly::q(-2)) +
                              sh.shuffle_elems(x, rv.real1[n - 1]));
    }
    return rv;
}

/// Alternative imaginary-root recursion through the alpha0 family:
///   E_{n delta} = q^-2 (y * E_{(n-1) delta + alpha0}) + E_{(n-1) delta + alpha0} * y.
/// Must agree with damiani_generators' imaginary family at every n.
inline FreeElement damiani_imag_alt(int n, Shuffler& sh) {
    if (n < 1) throw std::invalid_argument("damiani_imag_alt: n must be >= 1");
    RootVectorSet rv = damiani_generators(n - 1, sh);
    const FreeElement y = FreeElement::of_letter(Letter::Y);
    const FreeElement& r0 = rv.real0[n - 1];
    return sh.shuffle_elems(y, r0).scaled(LaurentPoly::q(-2)) + sh.shuffle_elems(r0, y);
}

/// All multiplicity vectors (p_1, .., p_n) with p_1 + 2 p_2 + .. + n p_n = n,
/// in descending lexicographic order.
inline std::vector<std::vector<int>> partitions_weighted(int n) {
    if (n < 1) throw std::invalid_argument("partitions_weighted: n must be >= 1");
    std::vector<std::vector<int>> out;
    std::vector<int> cur(n, 0);
    auto rec = [&](auto&& self, int part, int remaining) -> void {
        if (part > n) {
            if (remaining == 0) out.push_back(cur);
            return;
        }
        for (int p = remaining / part; p >= 0; --p) {
            cur[part - 1] = p;
            self(self, part + 1, remaining - part * p);
        }
        cur[part - 1] = 0;
    };
    rec(rec, 1, n);
    return out;
}

namespace detail {

/// Schur-type sum  sum over weighted partitions of
///   coeff(p) * prod_k (family[k])^{* p_k},
/// where coeff(p) = base(q)^{sum p - 1} * num(sum p - 1)! / prod p_k!
/// (num_factorial toggles the (sum p - 1)! factor).
inline FreeElement schur_sum(int n, std::span<const FreeElement> family, Shuffler& sh,
                             const LaurentPoly& base, bool num_factorial) {
    if (static_cast<int>(family.size()) <= n)
        throw std::invalid_argument("schur_sum: family too short");
    FreeElement total;
    for (const auto& p : partitions_weighted(n)) {
        int sum_p = 0;
        for (int pk : p) sum_p += pk;
        Rational num = num_factorial ? Rational::factorial(sum_p - 1) : Rational(1);
        for (int pk : p) num /= Rational::factorial(pk);
        FreeElement term = FreeElement::unit();
        for (int k = 1; k <= n; ++k)
            for (int rep = 0; rep < p[k - 1]; ++rep) term = sh.shuffle_elems(term, family[k]);
        total += term.scaled(base.pow(sum_p - 1).scaled(num));
    }
    return total;
}

}  // namespace detail

/// Beck-type imaginary generator from the Damiani family:
///   E^B_{n delta} = sum_p ((q+q^-1)^{sum p - 1} (sum p - 1)! / prod p_k!)
///                   (E_delta)^{p_1} * .. * (E_{n delta})^{p_n}.
/// `imag` must hold E_{k delta} at indices 1..n.
inline FreeElement beck_from_damiani(int n, std::span<const FreeElement> imag, Shuffler& sh) {
    return detail::schur_sum(n, imag, sh, q_plus_qinv(), true);
}

/// Inverse change of basis:
///   E_{n delta} = sum_p ((-(q+q^-1))^{sum p - 1} / prod p_k!)
///                 (E^B_delta)^{p_1} * .. * (E^B_{n delta})^{p_n}.
inline FreeElement damiani_from_beck(int n, std::span<const FreeElement> beck, Shuffler& sh) {
    return detail::schur_sum(n, beck, sh, -q_plus_qinv(), false);
}

/// Formal exponential of a series sum_k s_k t^k (no constant term) where
/// coefficient multiplication is the shuffle product; truncated at t-degree
/// `order`. Returns the map t-degree -> coefficient, with a unit at 0.
inline std::map<int, FreeElement> shuffle_exp_truncated(const std::map<int, FreeElement>& series,
                                                        int order, Shuffler& sh) {
    if (order < 0) throw std::invalid_argument("shuffle_exp_truncated: negative order");
    for (const auto& [d, s] : series)
        if (d < 1) throw std::invalid_argument("shuffle_exp_truncated: series must start at t^1");
    std::map<int, FreeElement> result;
    result[0] = FreeElement::unit();
    std::map<int, FreeElement> power;  // S^m, truncated
    power[0] = FreeElement::unit();
    Rational inv_mfact(1);
    for (int m = 1; m <= order; ++m) {
        std::map<int, FreeElement> next;
        for (const auto& [d1, e1] : power)
            for (const auto& [d2, e2] : series) {
                if (d1 + d2 > order) continue;
                auto& slot = next[d1 + d2];
                slot += sh.shuffle_elems(e1, e2);
            }
        power = std::move(next);
        if (power.empty()) break;
        inv_mfact /= Rational(m);
        for (const auto& [d, e] : power) result[d] += e.scaled(inv_mfact);
    }
    return result;
}

enum class DamianiKind { Real0, Real1, Imag };

/// Closed form of the Damiani-type generators through Catalan elements:
///   E_{n delta + alpha0} -> q^-2n (q+q^-1)^2n  x C_n
///   E_{n delta + alpha1} -> q^-2n (q+q^-1)^2n  C_n y
///   E_{n delta}          -> -q^-2n (q+q^-1)^(2n-1) C_n      (n >= 1)
inline FreeElement damiani_closed_form(int n, DamianiKind kind, CatalanTable& cat) {
    if (n < 0) throw std::invalid_argument("damiani_closed_form: n must be >= 0");
    switch (kind) {
        case DamianiKind::Real0:
            return cat.flank(n, FlankMode::XLeft)
                .scaled(q_plus_qinv().pow(2 * n).shifted(-2 * n));
        case DamianiKind::Real1:
            return cat.flank(n, FlankMode::YRight)
                .scaled(q_plus_qinv().pow(2 * n).shifted(-2 * n));
        case DamianiKind::Imag:
            if (n < 1) throw std::invalid_argument("damiani_closed_form: imaginary kind needs n >= 1");
            return cat.element(n).scaled(-q_plus_qinv().pow(2 * n - 1).shifted(-2 * n));
    }
    throw std::logic_error("damiani_closed_form: bad kind");
}

/// Closed form of the Beck-type generators:
///   E^B_{n delta} -> (-1)^n ({2n}_q / n) q^-2n (q+q^-1)^(2n-1) x C_{n-1} y,  n >= 1.
inline FreeElement beck_closed_form(int n, CatalanTable& cat) {
    if (n < 1) throw std::invalid_argument("beck_closed_form: n must be >= 1");
    LaurentPoly scale = q_brace(2 * n) * q_plus_qinv().pow(2 * n - 1);
    scale = scale.shifted(-2 * n).scaled(Rational(n % 2 == 0 ? 1 : -1, n));
    return cat.flank(n - 1, FlankMode::Both).scaled(scale);
}

}  // namespace qshuffle
