#include "keller/criteria.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace keller {

namespace {

std::size_t max_entry_terms(const std::vector<Polynomial>& entry) {
    std::size_t m = 0;
    for (const auto& p : entry) m = std::max(m, p.term_count());
    return m;
}

// p re-read over a wider variable set, its variables placed at `offset`.
Polynomial embed(const Polynomial& p, std::size_t new_nvars, std::size_t offset) {
    std::vector<Term> terms;
    terms.reserve(p.term_count());
    for (const auto& t : p.terms()) {
        std::vector<std::uint32_t> exps(new_nvars, 0);
        for (std::size_t j = 0; j < p.nvars(); ++j) exps[offset + j] = t.mono[j];
        terms.push_back(Term{Monomial(std::move(exps)), t.coeff});
    }
    return Polynomial::from_terms(new_nvars, std::move(terms));
}

}  // namespace

// --- DerivativeTable --------------------------------------------------------

DerivativeTable::DerivativeTable(NambuFrame frame) : frame_(std::move(frame)) {
    const std::size_t n = frame_.nvars();
    std::vector<Polynomial> base;
    base.reserve(n);
    for (std::size_t i = 0; i < n; ++i) base.push_back(Polynomial::variable(n, i));
    peak_terms_ = max_entry_terms(base);
    Level root;
    root.emplace(Monomial(n), std::move(base));
    levels_.push_back(std::move(root));
}

void DerivativeTable::extend() {
    const std::size_t n = frame_.nvars();
    Level next;
    for (const auto& [alpha, entry] : levels_.back()) {
        const std::size_t last = alpha.last_active_var();  // 1-based, 0 for the unit
        const std::size_t first_var = last == 0 ? 0 : last - 1;
        for (std::size_t j = first_var; j < n; ++j) {
            std::vector<Polynomial> child;
            child.reserve(n);
            for (const auto& p : entry) child.push_back(nambu_apply(frame_, j, p));
            peak_terms_ = std::max(peak_terms_, max_entry_terms(child));
            next.emplace(alpha.raised(j), std::move(child));
        }
    }
    levels_.push_back(std::move(next));
}

bool DerivativeTable::level_all_zero(std::uint32_t level) const {
    for (const auto& [alpha, entry] : this->level(level))
        for (const auto& p : entry)
            if (!p.is_zero()) return false;
    return true;
}

const DerivativeTable::Level& DerivativeTable::level(std::uint32_t m) const {
    if (m >= levels_.size()) throw std::out_of_range("DerivativeTable: level not built");
    return levels_[m];
}

const std::vector<Polynomial>& DerivativeTable::entry(const Monomial& alpha) const {
    const Level& lvl = level(alpha.total_degree());
    auto it = lvl.find(alpha);
    if (it == lvl.end()) throw std::out_of_range("DerivativeTable: entry not built");
    return it->second;
}

// --- EssenState --------------------------------------------------------------

EssenState::EssenState(const NambuFrame& frame)
    : n_(frame.nvars()), det_(frame.det_constant()), scaled_2n_(n_, n_, 2 * n_) {
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
            scaled_2n_.set(i, j, embed(frame.scaled_matrix().at(i, j), 2 * n_, 0));
    std::vector<Polynomial> base;
    base.reserve(n_);
    for (std::size_t i = 0; i < n_; ++i) base.push_back(Polynomial::variable(2 * n_, i));
    peak_terms_ = max_entry_terms(base);
    powers_.push_back(std::move(base));
}

void EssenState::extend() {
    const std::size_t nv = 2 * n_;
    const Rational inv_det = det_.reciprocal();
    std::vector<Polynomial> next;
    next.reserve(n_);
    for (const auto& p : powers_.back()) {
        Polynomial acc(nv);
        for (std::size_t j = 0; j < n_; ++j) {
            // d_j acting on the X block, scaled afterwards by 1/det
            Polynomial dj(nv);
            for (std::size_t l = 0; l < n_; ++l) {
                const Polynomial& row = scaled_2n_.at(j, l);
                if (row.is_zero()) continue;
                Polynomial pd = partial_derivative(p, l);
                if (pd.is_zero()) continue;
                dj += row * pd;
            }
            if (dj.is_zero()) continue;
            acc += Polynomial::variable(nv, n_ + j) * dj;
        }
        next.push_back(inv_det * acc);
    }
    peak_terms_ = std::max(peak_terms_, max_entry_terms(next));
    powers_.push_back(std::move(next));
}

const std::vector<Polynomial>& EssenState::power(std::uint32_t k) const {
    if (k >= powers_.size()) throw std::out_of_range("EssenState: power not built");
    return powers_[k];
}

bool EssenState::power_all_zero(std::uint32_t k) const {
    for (const auto& p : power(k))
        if (!p.is_zero()) return false;
    return true;
}

// --- shared helpers -----------------------------------------------------------

std::string_view verdict_tag(const Verdict& v) {
    if (std::holds_alternative<Invertible>(v)) return "invertible";
    if (std::holds_alternative<NotInvertibleWithinBound>(v)) return "not-within-bound";
    return "keller-violation";
}

std::uint64_t default_bound(const PolyMap& f) {
    const std::uint64_t d = map_degree(f);
    std::uint64_t b = 1;
    for (std::size_t k = 1; k < f.nvars(); ++k) {
        if (d != 0 && b > UINT64_MAX / d) throw std::overflow_error("default_bound: bound overflow");
        b *= d;
    }
    return b;
}

namespace {

std::uint64_t resolve_bound(const PolyMap& f, const std::optional<std::uint64_t>& override) {
    if (override) {
        if (*override == 0) throw std::invalid_argument("bound_override must be positive");
        return *override;
    }
    return default_bound(f);
}

Rational rational_factorial_of(const Monomial& alpha) {
    Rational f(1);
    for (std::size_t j = 0; j < alpha.nvars(); ++j)
        if (alpha[j] > 1) f *= factorial(alpha[j]);
    return f;
}

}  // namespace

// --- taylor criterion -----------------------------------------------------------

PolyMap build_inverse(const DerivativeTable& table, const PolyMap& f) {
    const std::uint32_t top = table.max_level();
    if (top < 1 || !table.level_all_zero(top))
        throw std::invalid_argument("build_inverse: table incomplete, top level must be all zero");
    const std::size_t n = table.nvars();
    const std::vector<Rational> b = f.value_at_origin();

    // powers of the shifted coordinates Y_j - F_j(0), grown on demand
    std::vector<std::vector<Polynomial>> pows(n);
    for (std::size_t j = 0; j < n; ++j) {
        pows[j].push_back(Polynomial::constant(n, Rational(1)));
        pows[j].push_back(Polynomial::variable(n, j) - Polynomial::constant(n, b[j]));
    }
    auto shifted_power = [&](std::size_t j, std::uint32_t e) -> const Polynomial& {
        auto& cache = pows[j];
        while (cache.size() <= e) cache.push_back(cache.back() * cache[1]);
        return cache[e];
    };

    std::vector<Polynomial> g(n, Polynomial(n));
    for (std::uint32_t m = 0; m < top; ++m) {
        for (const auto& [alpha, entry] : table.level(m)) {
            std::vector<Rational> at_zero;
            at_zero.reserve(n);
            bool any = false;
            for (const auto& p : entry) {
                at_zero.push_back(p.constant_term());
                any = any || !at_zero.back().is_zero();
            }
            if (!any) continue;
            Polynomial w = Polynomial::constant(n, Rational(1));
            for (std::size_t j = 0; j < n; ++j)
                if (alpha[j] != 0) w = w * shifted_power(j, alpha[j]);
            const Rational scale = rational_factorial_of(alpha).reciprocal();
            for (std::size_t i = 0; i < n; ++i)
                if (!at_zero[i].is_zero()) g[i] += (at_zero[i] * scale) * w;
        }
    }
    return PolyMap(std::move(g));
}

DeciderResult run_taylor(const PolyMap& f, std::optional<std::uint64_t> bound_override) {
    DeciderResult out;
    std::optional<NambuFrame> frame;
    try {
        frame.emplace(nambu_frame(f));
    } catch (const KellerViolationError& e) {
        out.verdict = KellerViolation{e.det()};
        return out;
    }
    const std::uint64_t bound = resolve_bound(f, bound_override);

    DerivativeTable table(std::move(*frame));
    for (std::uint64_t m = 1; m <= bound + 1; ++m) {
        table.extend();
        out.steps = m;
        if (table.level_all_zero(static_cast<std::uint32_t>(m))) {
            PolyMap inverse = build_inverse(table, f);
            if (!verify_inverse(f, inverse))
                throw std::logic_error("taylor criterion: certificate failed the composition check");
            out.peak_terms = table.peak_term_count();
            out.verdict = Invertible{std::move(inverse), static_cast<std::uint32_t>(m)};
            return out;
        }
    }
    // a nonzero derivative survives at level bound+1
    out.peak_terms = table.peak_term_count();
    const auto& top = table.level(static_cast<std::uint32_t>(bound + 1));
    for (const auto& [alpha, entry] : top) {
        for (std::size_t i = 0; i < entry.size(); ++i) {
            if (!entry[i].is_zero()) {
                out.verdict =
                    NotInvertibleWithinBound{bound, Witness{i, alpha, entry[i]}};
                return out;
            }
        }
    }
    throw std::logic_error("taylor criterion: bound level vanished after the scan");
}

Verdict taylor_criterion(const PolyMap& f, std::optional<std::uint64_t> bound_override) {
    return run_taylor(f, bound_override).verdict;
}

// --- essen criterion --------------------------------------------------------------

namespace {

// D^k(X_i) with X set to 0, re-read as an n-variable polynomial in Y.
Polynomial y_part_at_x_zero(const Polynomial& p, std::size_t n) {
    std::vector<Term> kept;
    for (const auto& t : p.terms()) {
        bool pure_y = true;
        for (std::size_t j = 0; j < n && pure_y; ++j) pure_y = t.mono[j] == 0;
        if (!pure_y) continue;
        std::vector<std::uint32_t> exps(t.mono.exponents().begin() + static_cast<std::ptrdiff_t>(n),
                                        t.mono.exponents().end());
        kept.push_back(Term{Monomial(std::move(exps)), t.coeff});
    }
    return Polynomial::from_terms(n, std::move(kept));
}

PolyMap essen_read_inverse(const EssenState& st, const PolyMap& f, std::uint32_t zero_power) {
    const std::size_t n = st.nvars();
    const std::vector<Rational> b = f.value_at_origin();
    std::vector<Polynomial> shift;
    shift.reserve(n);
    for (std::size_t j = 0; j < n; ++j)
        shift.push_back(Polynomial::variable(n, j) - Polynomial::constant(n, b[j]));

    std::vector<Polynomial> g(n, Polynomial(n));
    Rational inv_kfac(1);
    for (std::uint32_t k = 0; k < zero_power; ++k) {
        if (k > 0) inv_kfac = inv_kfac / Rational(static_cast<long>(k));
        for (std::size_t i = 0; i < n; ++i) {
            Polynomial e = y_part_at_x_zero(st.power(k)[i], n);
            if (e.is_zero()) continue;
            g[i] += inv_kfac * substitute(e, shift);
        }
    }
    return PolyMap(std::move(g));
}

}  // namespace

DeciderResult run_essen(const PolyMap& f, std::optional<std::uint64_t> bound_override) {
    DeciderResult out;
    std::optional<NambuFrame> frame;
    try {
        frame.emplace(nambu_frame(f));
    } catch (const KellerViolationError& e) {
        out.verdict = KellerViolation{e.det()};
        return out;
    }
    const std::uint64_t bound = resolve_bound(f, bound_override);

    EssenState state(*frame);
    for (std::uint64_t k = 1; k <= bound + 1; ++k) {
        state.extend();
        out.steps = k;
        if (state.power_all_zero(static_cast<std::uint32_t>(k))) {
            PolyMap inverse = essen_read_inverse(state, f, static_cast<std::uint32_t>(k));
            if (!verify_inverse(f, inverse))
                throw std::logic_error("essen criterion: certificate failed the composition check");
            out.peak_terms = state.peak_term_count();
            out.verdict = Invertible{std::move(inverse), static_cast<std::uint32_t>(k)};
            return out;
        }
    }
    out.peak_terms = state.peak_term_count();
    const auto& top = state.power(static_cast<std::uint32_t>(bound + 1));
    for (std::size_t i = 0; i < top.size(); ++i) {
        if (!top[i].is_zero()) {
            out.verdict = NotInvertibleWithinBound{bound, Witness{i, std::nullopt, top[i]}};
            return out;
        }
    }
    throw std::logic_error("essen criterion: bound power vanished after the scan");
}

Verdict essen_criterion(const PolyMap& f, std::optional<std::uint64_t> bound_override) {
    return run_essen(f, bound_override).verdict;
}

// --- series oracle -----------------------------------------------------------------

namespace {

// Exact inverse of a constant rational matrix by Gauss-Jordan elimination.
std::vector<std::vector<Rational>> invert_rational_matrix(std::vector<std::vector<Rational>> a) {
    const std::size_t n = a.size();
    std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = Rational(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col].is_zero()) ++pivot;
        if (pivot == n) throw std::logic_error("invert_rational_matrix: singular matrix");
        std::swap(a[col], a[pivot]);
        std::swap(inv[col], inv[pivot]);
        const Rational scale = a[col][col].reciprocal();
        for (std::size_t j = 0; j < n; ++j) {
            a[col][j] *= scale;
            inv[col][j] *= scale;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col].is_zero()) continue;
            const Rational factor = a[r][col];
            for (std::size_t j = 0; j < n; ++j) {
                a[r][j] -= factor * a[col][j];
                inv[r][j] -= factor * inv[col][j];
            }
        }
    }
    return inv;
}

}  // namespace

DeciderResult run_series(const PolyMap& f, std::uint64_t trunc_degree) {
    if (trunc_degree == 0) throw std::invalid_argument("series oracle: truncation degree must be positive");
    DeciderResult out;
    try {
        keller_check(f);
    } catch (const KellerViolationError& e) {
        out.verdict = KellerViolation{e.det()};
        return out;
    }
    const std::size_t n = f.nvars();
    const std::uint32_t trunc = trunc_degree > UINT32_MAX
                                    ? UINT32_MAX
                                    : static_cast<std::uint32_t>(trunc_degree);
    const std::vector<Rational> b = f.value_at_origin();

    // A = J_F(0); invertible because det(J_F) is a nonzero constant
    const PolyMatrix jac = jacobian(f);
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = jac.at(i, j).constant_term();
    const auto a_inv = invert_rational_matrix(std::move(a));

    // normalized map A^-1 (F - F(0)) = X - H with ord(H) >= 2
    std::vector<Polynomial> h;
    h.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        Polynomial fbar(n);
        for (std::size_t j = 0; j < n; ++j) {
            if (a_inv[i][j].is_zero()) continue;
            fbar += a_inv[i][j] * (f.component(j) - Polynomial::constant(n, b[j]));
        }
        Polynomial hi = Polynomial::variable(n, i) - fbar;
        for (const auto& t : hi.terms())
            if (t.mono.total_degree() < 2)
                throw std::logic_error("series oracle: normalized map kept low-order terms");
        h.push_back(std::move(hi));
    }

    // fixpoint iteration G <- Y + H(G), truncated above trunc
    std::vector<Polynomial> g;
    g.reserve(n);
    for (std::size_t i = 0; i < n; ++i) g.push_back(Polynomial::variable(n, i));
    std::size_t peak = 0;
    std::uint64_t iters = 0;
    for (std::uint64_t t = 1; t <= trunc_degree; ++t) {
        iters = t;
        std::vector<Polynomial> next;
        next.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            Polynomial gi = Polynomial::variable(n, i);
            if (!h[i].is_zero()) gi += substitute_truncated(h[i], g, trunc);
            peak = std::max(peak, gi.term_count());
            next.push_back(std::move(gi));
        }
        const bool fixed = next == g;
        g = std::move(next);
        if (fixed) break;
    }
    out.steps = iters;
    out.peak_terms = peak;

    // de-normalize: candidate(Y) = G(A^-1 (Y - F(0)))
    std::vector<Polynomial> denorm;
    denorm.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
        Polynomial img(n);
        for (std::size_t l = 0; l < n; ++l) {
            if (a_inv[j][l].is_zero()) continue;
            img += a_inv[j][l] * (Polynomial::variable(n, l) - Polynomial::constant(n, b[l]));
        }
        denorm.push_back(std::move(img));
    }
    std::vector<Polynomial> comps;
    comps.reserve(n);
    for (std::size_t i = 0; i < n; ++i) comps.push_back(substitute(g[i], denorm));
    PolyMap candidate(std::move(comps));

    if (verify_inverse(f, candidate)) {
        out.verdict = Invertible{std::move(candidate), static_cast<std::uint32_t>(iters)};
        return out;
    }
    const PolyMap residual = compose_maps(f, candidate);
    const PolyMap id = PolyMap::identity(n);
    for (std::size_t i = 0; i < n; ++i) {
        Polynomial r = residual.component(i) - id.component(i);
        if (!r.is_zero()) {
            out.verdict = NotInvertibleWithinBound{trunc_degree, Witness{i, std::nullopt, std::move(r)}};
            return out;
        }
    }
    // f o candidate was the identity, so g o f must have failed
    const PolyMap residual_left = compose_maps(candidate, f);
    for (std::size_t i = 0; i < n; ++i) {
        Polynomial r = residual_left.component(i) - id.component(i);
        if (!r.is_zero()) {
            out.verdict = NotInvertibleWithinBound{trunc_degree, Witness{i, std::nullopt, std::move(r)}};
            return out;
        }
    }
    throw std::logic_error("series oracle: verification failed but both residuals vanish");
}

Verdict series_inverse_oracle(const PolyMap& f, std::uint64_t trunc_degree) {
    return run_series(f, trunc_degree).verdict;
}

// --- verification and cross-check ------------------------------------------------------

bool verify_inverse(const PolyMap& f, const PolyMap& g) {
    if (f.nvars() != g.nvars()) throw std::invalid_argument("verify_inverse: variable count mismatch");
    const PolyMap id = PolyMap::identity(f.nvars());
    return compose_maps(f, g) == id && compose_maps(g, f) == id;
}

CriterionReport cross_check(const PolyMap& f) {
    std::uint64_t bound = 1;
    try {
        bound = default_bound(f);
    } catch (const std::exception&) {
        // all-constant maps fail the gate below; any bound works
    }

    CriterionReport report;
    auto timed = [&](const char* name, auto&& fn) {
        const auto t0 = std::chrono::steady_clock::now();
        DeciderResult r = fn();
        const auto t1 = std::chrono::steady_clock::now();
        const double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
        report.runs.push_back(CriterionRun{name, std::move(r.verdict), ms, r.steps, r.peak_terms});
    };
    timed("taylor", [&] { return run_taylor(f); });
    timed("essen", [&] { return run_essen(f); });
    timed("series", [&] { return run_series(f, bound); });

    const std::string_view tag0 = verdict_tag(report.runs[0].verdict);
    for (const auto& run : report.runs) {
        if (verdict_tag(run.verdict) != tag0) {
            std::ostringstream os;
            os << "criterion disagreement:";
            for (const auto& r : report.runs) os << ' ' << r.criterion << '=' << verdict_tag(r.verdict);
            throw CriterionDisagreement(os.str());
        }
    }
    if (tag0 == "invertible") {
        const PolyMap& inv0 = std::get<Invertible>(report.runs[0].verdict).inverse;
        for (const auto& run : report.runs) {
            if (!(std::get<Invertible>(run.verdict).inverse == inv0))
                throw CriterionDisagreement("criterion disagreement: certified inverses differ");
        }
    }
    return report;
}

}  // namespace keller
