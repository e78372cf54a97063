#ifndef ROOTWIND_CHAIN_HPP
#define ROOTWIND_CHAIN_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rootwind/halfint.hpp"
#include "rootwind/poly.hpp"

namespace rootwind {

// Var_x(P,Q) = (1/2)|sign P(x) - sign Q(x)|, in {0, 1/2, 1}.
inline HalfInt var_at(const UniPoly& P, const UniPoly& Q, const Rational& x) {
    const int s = sign_of(P(x)) - sign_of(Q(x));
    return HalfInt::half(s < 0 ? -s : s);
}

// Var_a^b(P,Q) = Var_a(P,Q) - Var_b(P,Q).
inline HalfInt var_interval(const UniPoly& P, const UniPoly& Q, const Rational& a,
                            const Rational& b) {
    return var_at(P, Q, a) - var_at(P, Q, b);
}

inline std::vector<int> epsilon_weights(const std::vector<int>& sigma,
                                        const std::vector<int>& tau) {
    std::vector<int> eps{1};
    for (std::size_t j = 0; j < sigma.size(); ++j) eps.push_back(eps.back() * sigma[j] * tau[j]);
    return eps;
}

// A sequence S_0..S_n with witnesses A_i, B_i, C_i (1 <= i <= n-1) satisfying
// A_i S_{i+1} + B_i S_i + C_i S_{i-1} = 0, where A_i keeps sign sigma[i-1] and
// C_i keeps sign tau[i-1] on the interval (empty interval = whole line, in
// which case the witnesses must be constants). epsilon[i-1] is the running
// product of sigma*tau strictly below i; epsilon[0] = 1 always.
struct SigmaTauChain {
    std::vector<UniPoly> s;
    std::vector<int> sigma, tau;
    std::vector<int> epsilon;
    std::vector<UniPoly> a_wit, b_wit, c_wit;
    std::optional<std::pair<Rational, Rational>> interval; // nullopt: all of the line
    bool good = false;                                     // S_n rootless on the interval

    int n() const { return static_cast<int>(s.size()) - 1; }
};

// Var(sigma,tau)_a^b = sum_i epsilon_i Var_a^b(S_{i-1}, S_i).
inline HalfInt var_sigma_tau(const SigmaTauChain& ch, const Rational& a, const Rational& b) {
    HalfInt acc;
    for (int i = 1; i <= ch.n(); ++i)
        acc += var_interval(ch.s[static_cast<std::size_t>(i - 1)],
                            ch.s[static_cast<std::size_t>(i)], a, b) *
               ch.epsilon[static_cast<std::size_t>(i - 1)];
    return acc;
}

// Subresultant-derived good Sturm chain for coprime S0, S1 with
// deg S1 < deg S0. Witness constants come straight from the structure
// theorem data; the chain is valid on the whole line.
SigmaTauChain build_chain(const UniPoly& S0, const UniPoly& S1);

// Chain template over Q[Y][X] valid for y in [ylo, yhi]: specializing Y gives
// an X-chain on the whole line, specializing X gives a Y-chain on [ylo, yhi].
struct BivariateChainTemplate {
    std::vector<BiPoly> s;
    std::vector<UniPoly> a_wit, c_wit; // elements of Q[Y]
    std::vector<BiPoly> b_wit;
    std::vector<int> sigma, tau, epsilon;
    Rational ylo, yhi;

    SigmaTauChain specialize_at_y(const Rational& y) const;
    SigmaTauChain specialize_at_x(const Rational& x) const;
    int n() const { return static_cast<int>(s.size()) - 1; }
};

BivariateChainTemplate build_chain_bivariate(const BiPoly& S0, const BiPoly& S1,
                                             const Rational& ylo, const Rational& yhi);

// Checks every invariant of the definition on a fully materialized chain:
// witness relation, sign conditions, epsilon recurrence, rootless last member,
// successive coprimality on the interval. Whole-line chains must carry
// constant witnesses and a constant last member. Throws DomainError with the
// first violated condition.
void validate_chain(const SigmaTauChain& ch);

} // namespace rootwind

#endif
