#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "rhyper/rational.hpp"

namespace rhyper {

// Variable context for the deformation complex: paired generators x_i, p^i
// with |x_i| + |p^i| = 2d, plus the formal parameter hbar of degree 2d.
class PolyContext {
public:
    PolyContext(int d, std::vector<std::pair<std::string, int>> x_names_degrees);

    int d() const { return d_; }
    int pairs() const { return (int)xdeg_.size(); }
    int var_count() const { return 2 * pairs(); }

    // variables are indexed 0..pairs-1 for x_i and pairs..2*pairs-1 for p^i
    int x_var(int i) const { return i; }
    int p_var(int i) const { return pairs() + i; }
    bool is_x(int v) const { return v < pairs(); }
    int pair_of(int v) const { return is_x(v) ? v : v - pairs(); }
    int var_degree(int v) const { return is_x(v) ? xdeg_[v] : 2 * d_ - xdeg_[v - pairs()]; }
    bool var_odd(int v) const { return var_degree(v) & 1; }
    std::string var_name(int v) const;

    friend bool operator==(const PolyContext& a, const PolyContext& b) {
        return a.d_ == b.d_ && a.xdeg_ == b.xdeg_ && a.names_ == b.names_;
    }

private:
    int d_;
    std::vector<int> xdeg_;
    std::vector<std::string> names_;
};

using PolyContextPtr = std::shared_ptr<const PolyContext>;

struct Monomial {
    std::vector<int> exps;  // per variable; odd variables carry 0/1
    int hbar = 0;

    friend bool operator<(const Monomial& a, const Monomial& b) {
        return std::tie(a.hbar, a.exps) < std::tie(b.hbar, b.exps);
    }
    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.hbar == b.hbar && a.exps == b.exps;
    }
};

// Sparse truncated polynomial in the context variables and hbar. Odd
// variables are anticommuting (canonical monomial order is x_1..x_N,
// p^1..p^N; signs are produced by the arithmetic). Truncation: monomials
// with hbar power > hbar_trunc or total exponent count > degree_trunc are
// dropped on insertion; -1 disables either bound. hbar-truncation is an
// algebra quotient, so every identity below survives it.
class PolySeries {
public:
    PolySeries() = default;
    explicit PolySeries(PolyContextPtr ctx, int hbar_trunc = -1, int degree_trunc = -1)
        : ctx_(std::move(ctx)), hbar_trunc_(hbar_trunc), degree_trunc_(degree_trunc) {}

    const PolyContextPtr& context() const { return ctx_; }
    int hbar_trunc() const { return hbar_trunc_; }
    int degree_trunc() const { return degree_trunc_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, Rational>& terms() const { return terms_; }

    void add(const Monomial& mono, const Rational& coeff);
    void add_series(const PolySeries& other, const Rational& scale = Rational(1));

    // homological degree of a monomial
    int mono_degree(const Monomial& m) const;
    // parity of a homogeneous series; throws if mixed
    int parity() const;

    PolySeries filter(const std::function<bool(const Monomial&)>& keep) const;

    std::string str() const;

    friend bool operator==(const PolySeries& a, const PolySeries& b) {
        return a.terms_ == b.terms_;
    }

private:
    PolyContextPtr ctx_;
    int hbar_trunc_ = -1;
    int degree_trunc_ = -1;
    std::map<Monomial, Rational> terms_;
};

// Convenience builders.
PolySeries poly_one(const PolyContextPtr& ctx, int hbar_trunc = -1, int degree_trunc = -1);
PolySeries poly_var(const PolyContextPtr& ctx, int var, int hbar_trunc = -1, int degree_trunc = -1);

// Graded-commutative product.
PolySeries poly_mul(const PolySeries& f, const PolySeries& g);

// Left derivative by a variable.
PolySeries poly_derivative(const PolySeries& f, int var);

// f *_hbar g = sum_k hbar^k/k! (d^k f / dp...) (d^k g / dx...), with Koszul
// signs; exact for polynomials. Throws on context mismatch.
PolySeries star(const PolySeries& f, const PolySeries& g);

// [f,g] = (f*g - (-1)^{|f||g|} g*f)/hbar. Throws logic_error if the
// numerator is not divisible by hbar (a sign bug, never a data error).
PolySeries hbar_bracket(const PolySeries& f, const PolySeries& g);

struct McReport {
    bool support_ok = true;
    bool pass = false;
    PolySeries residue;
    std::string message;
};

// Maurer-Cartan check: requires every monomial of Gamma to contain at least
// one x and one p variable, then reports whether Gamma * Gamma vanishes up
// to the truncation.
McReport check_mc(const PolySeries& gamma);

}  // namespace rhyper
