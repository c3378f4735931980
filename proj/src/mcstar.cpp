#include "rhyper/mcstar.hpp"

#include <sstream>
#include <stdexcept>

namespace rhyper {

PolyContext::PolyContext(int d, std::vector<std::pair<std::string, int>> x_names_degrees) : d_(d) {
    for (auto& [name, deg] : x_names_degrees) {
        names_.push_back(name);
        xdeg_.push_back(deg);
    }
}

std::string PolyContext::var_name(int v) const {
    if (is_x(v)) return "x_" + names_[v];
    return "p^" + names_[v - pairs()];
}

void PolySeries::add(const Monomial& mono, const Rational& coeff) {
    if (coeff.is_zero()) return;
    if (hbar_trunc_ >= 0 && mono.hbar > hbar_trunc_) return;
    if (degree_trunc_ >= 0) {
        int total = 0;
        for (int e : mono.exps) total += e;
        if (total > degree_trunc_) return;
    }
    auto it = terms_.find(mono);
    if (it == terms_.end()) {
        terms_.emplace(mono, coeff);
    } else {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void PolySeries::add_series(const PolySeries& other, const Rational& scale) {
    for (const auto& [m, c] : other.terms_) add(m, c * scale);
}

int PolySeries::mono_degree(const Monomial& m) const {
    int deg = 2 * ctx_->d() * m.hbar;
    for (int v = 0; v < ctx_->var_count(); ++v) deg += m.exps[v] * ctx_->var_degree(v);
    return deg;
}

int PolySeries::parity() const {
    int par = -1;
    for (const auto& [m, c] : terms_) {
        int p = mono_degree(m) & 1;
        if (par < 0) par = p;
        if (p != par) throw std::invalid_argument("series is not parity-homogeneous");
    }
    return par < 0 ? 0 : par;
}

PolySeries PolySeries::filter(const std::function<bool(const Monomial&)>& keep) const {
    PolySeries out(ctx_, hbar_trunc_, degree_trunc_);
    for (const auto& [m, c] : terms_)
        if (keep(m)) out.add(m, c);
    return out;
}

std::string PolySeries::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c.str();
        if (m.hbar) os << "*h^" << m.hbar;
        for (int v = 0; v < ctx_->var_count(); ++v)
            if (m.exps[v]) {
                os << "*" << ctx_->var_name(v);
                if (m.exps[v] > 1) os << "^" << m.exps[v];
            }
    }
    return os.str();
}

PolySeries poly_one(const PolyContextPtr& ctx, int hbar_trunc, int degree_trunc) {
    PolySeries f(ctx, hbar_trunc, degree_trunc);
    f.add(Monomial{std::vector<int>(ctx->var_count(), 0), 0}, Rational(1));
    return f;
}

PolySeries poly_var(const PolyContextPtr& ctx, int var, int hbar_trunc, int degree_trunc) {
    PolySeries f(ctx, hbar_trunc, degree_trunc);
    Monomial m{std::vector<int>(ctx->var_count(), 0), 0};
    m.exps[var] = 1;
    f.add(m, Rational(1));
    return f;
}

namespace {

int mono_parity(const PolyContext& ctx, const Monomial& m) {
    int par = 0;
    for (int v = 0; v < ctx.var_count(); ++v)
        if (ctx.var_odd(v)) par ^= m.exps[v] & 1;
    return par;
}

// product of two monomials with the Koszul interleaving sign; zero when an
// odd variable repeats
bool mono_mul(const PolyContext& ctx, const Monomial& a, const Monomial& b, Monomial& out,
              int& sign) {
    sign = 0;
    out.exps.assign(ctx.var_count(), 0);
    out.hbar = a.hbar + b.hbar;
    // count crossings: each odd var v of b moves left past odd vars w > v of a
    int odd_tail = 0;  // odd vars of a with index > v, scanned right-to-left
    for (int v = ctx.var_count() - 1; v >= 0; --v) {
        if (ctx.var_odd(v)) {
            if (b.exps[v]) {
                if (a.exps[v]) return false;
                sign += odd_tail;
            }
            if (a.exps[v]) ++odd_tail;
        }
        out.exps[v] = a.exps[v] + b.exps[v];
    }
    sign &= 1;
    return true;
}

void check_same_context(const PolySeries& f, const PolySeries& g) {
    if (!f.context() || !g.context() || !(*f.context() == *g.context()))
        throw std::invalid_argument("context mismatch");
}

int merge_trunc(int a, int b) {
    if (a < 0) return b;
    if (b < 0) return a;
    return a < b ? a : b;
}

}  // namespace

PolySeries poly_mul(const PolySeries& f, const PolySeries& g) {
    check_same_context(f, g);
    PolySeries out(f.context(), merge_trunc(f.hbar_trunc(), g.hbar_trunc()),
                   merge_trunc(f.degree_trunc(), g.degree_trunc()));
    const PolyContext& ctx = *f.context();
    for (const auto& [ma, ca] : f.terms())
        for (const auto& [mb, cb] : g.terms()) {
            Monomial m;
            int s;
            if (!mono_mul(ctx, ma, mb, m, s)) continue;
            out.add(m, ca * cb * Rational(s ? -1 : 1));
        }
    return out;
}

PolySeries poly_derivative(const PolySeries& f, int var) {
    const PolyContext& ctx = *f.context();
    PolySeries out(f.context(), f.hbar_trunc(), f.degree_trunc());
    for (const auto& [m, c] : f.terms()) {
        if (!m.exps[var]) continue;
        Monomial q = m;
        q.exps[var] -= 1;
        if (ctx.var_odd(var)) {
            int before = 0;
            for (int w = 0; w < var; ++w)
                if (ctx.var_odd(w) && m.exps[w]) before ^= m.exps[w] & 1;
            out.add(q, c * Rational(before ? -1 : 1));
        } else {
            out.add(q, c * Rational(m.exps[var]));
        }
    }
    return out;
}

PolySeries star(const PolySeries& f, const PolySeries& g) {
    check_same_context(f, g);
    const PolyContext& ctx = *f.context();
    const int hb = merge_trunc(f.hbar_trunc(), g.hbar_trunc());
    const int db = merge_trunc(f.degree_trunc(), g.degree_trunc());
    PolySeries out(f.context(), hb, db);

    // tensor terms (a (x) b), advanced by C = sum_i +- d/dp^i (x) d/dx_i
    std::map<std::pair<Monomial, Monomial>, Rational> tensor;
    for (const auto& [ma, ca] : f.terms())
        for (const auto& [mb, cb] : g.terms()) tensor[{ma, mb}] += ca * cb;

    Rational inv_factorial(1);
    for (int k = 0; !tensor.empty(); ++k) {
        if (k > 0) inv_factorial /= Rational(k);
        if (hb < 0 || k <= hb) {
            for (const auto& [pair, c] : tensor) {
                if (c.is_zero()) continue;
                Monomial m;
                int s;
                if (!mono_mul(ctx, pair.first, pair.second, m, s)) continue;
                m.hbar += k;
                out.add(m, c * inv_factorial * Rational(s ? -1 : 1));
            }
        } else {
            break;
        }
        std::map<std::pair<Monomial, Monomial>, Rational> next;
        for (const auto& [pair, c] : tensor) {
            if (c.is_zero()) continue;
            const auto& [ma, mb] = pair;
            int fa_par = mono_parity(ctx, ma);
            for (int i = 0; i < ctx.pairs(); ++i) {
                int pv = ctx.p_var(i), xv = ctx.x_var(i);
                if (!ma.exps[pv] || !mb.exps[xv]) continue;
                // (A (x) B)(f (x) g) = (-1)^{|B||f|} A f (x) B g with
                // A = d/dp^i acting on the left factor, B = d/dx_i
                int op_sign = (ctx.var_odd(xv) && fa_par) ? 1 : 0;
                // derivative of the left factor by p^i
                Monomial qa = ma;
                qa.exps[pv] -= 1;
                Rational csa(1);
                if (ctx.var_odd(pv)) {
                    int before = 0;
                    for (int w = 0; w < pv; ++w)
                        if (ctx.var_odd(w) && ma.exps[w]) before ^= ma.exps[w] & 1;
                    if (before) csa = Rational(-1);
                } else {
                    csa = Rational(ma.exps[pv]);
                }
                Monomial qb = mb;
                qb.exps[xv] -= 1;
                Rational csb(1);
                if (ctx.var_odd(xv)) {
                    int before = 0;
                    for (int w = 0; w < xv; ++w)
                        if (ctx.var_odd(w) && mb.exps[w]) before ^= mb.exps[w] & 1;
                    if (before) csb = Rational(-1);
                } else {
                    csb = Rational(mb.exps[xv]);
                }
                Rational delta = c * csa * csb * Rational(op_sign ? -1 : 1);
                if (!delta.is_zero()) next[{qa, qb}] += delta;
            }
        }
        tensor = std::move(next);
    }
    return out;
}

PolySeries hbar_bracket(const PolySeries& f, const PolySeries& g) {
    check_same_context(f, g);
    int sign = (f.parity() && g.parity()) ? -1 : 1;
    PolySeries num = star(f, g);
    num.add_series(star(g, f), Rational(-sign));
    PolySeries out(f.context(), num.hbar_trunc(), num.degree_trunc());
    for (const auto& [m, c] : num.terms()) {
        if (m.hbar < 1) throw std::logic_error("hbar_bracket: numerator not divisible by hbar");
        Monomial q = m;
        q.hbar -= 1;
        out.add(q, c);
    }
    return out;
}

McReport check_mc(const PolySeries& gamma) {
    McReport rep;
    const PolyContext& ctx = *gamma.context();
    for (const auto& [m, c] : gamma.terms()) {
        bool has_x = false, has_p = false;
        for (int i = 0; i < ctx.pairs(); ++i) {
            has_x = has_x || m.exps[ctx.x_var(i)] > 0;
            has_p = has_p || m.exps[ctx.p_var(i)] > 0;
        }
        if (!has_x || !has_p) {
            rep.support_ok = false;
            rep.message = "support condition violated: monomial without x*p factor";
            return rep;
        }
    }
    rep.residue = star(gamma, gamma);
    rep.pass = rep.residue.is_zero();
    if (!rep.pass) rep.message = "Gamma * Gamma != 0";
    return rep;
}

}  // namespace rhyper
