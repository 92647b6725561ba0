#include "hyperforge/identities.hpp"

#include "hyperforge/charpoly.hpp"

#include <sstream>

namespace hyperforge {

const Rational& IdentityParams::operator[](const std::string& name) const {
    auto it = s.find(name);
    if (it == s.end()) fail(ErrorKind::Unsupported, "missing parameter " + name);
    return it->second;
}

std::vector<std::pair<std::string, std::string>> IdentityParams::fields() const {
    std::vector<std::pair<std::string, std::string>> out;
    auto list = [](const auto& v) {
        std::ostringstream o;
        o << "(";
        for (size_t i = 0; i < v.size(); ++i) {
            if (i) o << ",";
            if constexpr (std::is_same_v<std::decay_t<decltype(v[i])>, Rational>)
                o << to_string(v[i]);
            else
                o << v[i];
        }
        o << ")";
        return o.str();
    };
    for (const auto& [k, v] : s) out.emplace_back(k, to_string(v));
    if (n) out.emplace_back("n", std::to_string(n));
    if (k) out.emplace_back("k", std::to_string(k));
    if (!f.empty()) out.emplace_back("f", list(f)), out.emplace_back("m", list(m));
    if (!h.empty()) out.emplace_back("h", list(h)), out.emplace_back("p", list(p));
    return out;
}

std::string IdentityParams::str() const {
    std::ostringstream o;
    bool first = true;
    for (const auto& [k, v] : fields()) {
        o << (first ? "" : " ") << k << "=" << v;
        first = false;
    }
    return o.str();
}

const char* to_string(VerifyMode m) { return m == VerifyMode::Exact ? "exact" : "numeric"; }

void check_constraints(const IdentityEntry& e, const IdentityParams& p) {
    for (const auto& c : e.constraints)
        if (!c.holds(p)) fail(c.kind, e.id + ": " + c.name);
}

namespace {

struct Sides {
    HyperSpec lhs;
    IdentitySide rhs;
};

Sides build_sides(const SpecBuilder& l, const SideBuilder& r, const IdentityParams& p) {
    return {l(p), r(p)};
}

Sides catalog_sides(const IdentityEntry& e, const IdentityParams& p) { return build_sides(e.lhs, e.rhs, p); }

Sides numeric_sides(const IdentityEntry& e, size_t which, const IdentityParams& p) {
    const NumericExtension& x = e.numeric.at(which);
    return build_sides(x.lhs ? x.lhs : e.lhs, x.rhs ? x.rhs : e.rhs, p);
}

int count_nonpos(const std::vector<Rational>& v) {
    int c = 0;
    for (const auto& a : v) c += is_nonpos_int(a);
    return c;
}

bool reject(std::string* why, const std::string& msg) {
    if (why) *why = msg;
    return false;
}

// Admissibility shared by exact and numeric draws.
// which < 0 checks the catalog form, otherwise that numeric extension.
bool sides_ok(const IdentityEntry& e, const IdentityParams& p, long which, std::string* why) {
    bool numeric = which >= 0;
    try {
        check_constraints(e, p);
    } catch (const MathError& err) {
        return reject(why, err.what());
    }
    if (numeric && e.numeric[size_t(which)].region && !e.numeric[size_t(which)].region(p))
        return reject(why, "outside the claim's stated region");
    Sides s;
    try {
        s = numeric ? numeric_sides(e, size_t(which), p) : catalog_sides(e, p);
    } catch (const std::exception& err) {
        return reject(why, std::string("builder: ") + err.what());
    }
    for (const HyperSpec* h : {&s.lhs, &s.rhs.series}) {
        // exact draws stay clear of every non-positive integer lower parameter
        if (numeric ? bool(lower_pole(*h)) : count_nonpos(h->lower) > 0)
            return reject(why, "non-positive integer lower parameter");
        if (count_nonpos(h->upper) > 1) return reject(why, "accidental non-positive integer upper parameter");
        bool term = h->truncate_at || termination_index(*h);
        if (!numeric && !term) return reject(why, "side does not terminate");
        if (!term) {
            if (abs(h->x) > 1) return reject(why, "|x| > 1 without termination");
            if (abs(h->x) == 1) {
                Rational need = h->x == 1 ? Rational(h->weight.degree()) : Rational(h->weight.degree() - 1);
                // Levin needs some room above the convergence boundary
                if (parametric_excess(*h) - need < 1) return reject(why, "too close to the convergence boundary");
            }
        }
    }
    // Γ(0)/Γ(0) in the prefactor: the value depends on the direction of approach
    auto poles = [](const std::vector<Rational>& v) { return count_nonpos(v) > 0; };
    if (poles(s.rhs.prefactor.num) && poles(s.rhs.prefactor.den)) return reject(why, "pole over pole in the prefactor");
    try {
        GammaRatio r = reduce(s.rhs.prefactor);
        if (r.factor == 0) return reject(why, "prefactor vanishes");
        if (!r.is_exact()) gamma_ratio_eval(r);
    } catch (const std::exception& err) {
        return reject(why, std::string("prefactor: ") + err.what());
    }
    return true;
}

Real rel_diff(const Real& a, const Real& b) {
    Real d = abs(a - b);
    if (d == 0) return d;
    return d / std::max(abs(a), abs(b));
}

IdentityCheck compare(const Sides& s, VerifyMode mode, int precision, long budget = 100000) {
    WorkingPrecision wp(precision);
    EvalOptions opt;
    opt.precision = precision;
    opt.budget = budget;
    IdentityCheck c;
    SeriesValue L = evaluate(s.lhs, opt);
    SeriesValue R = evaluate(s.rhs.series, opt);
    Scalar pre = evaluate(s.rhs.prefactor);
    c.lhs = L.value;
    c.rhs = pre * R.value;
    c.terms_used = std::max(L.terms_used, R.terms_used);
    if (mode == VerifyMode::Exact && c.lhs.exact && c.rhs.exact) {
        c.exact = true;
        c.passed = c.lhs.q == c.rhs.q;
        Real d = to_real(c.lhs.q - c.rhs.q);
        c.abs_discrepancy = abs(d);
        c.rel_discrepancy = rel_diff(c.lhs.approx(), c.rhs.approx());
        return c;
    }
    Real l = c.lhs.approx(), r = c.rhs.approx();
    c.abs_discrepancy = abs(l - r);
    c.rel_discrepancy = rel_diff(l, r);
    c.passed = c.rel_discrepancy <= pow(Real(10), 16 - precision);
    return c;
}

}  // namespace

bool admissible(const IdentityEntry& e, const IdentityParams& p, std::string* why) { return sides_ok(e, p, -1, why); }

std::optional<IdentityParams> draw_admissible(const IdentityEntry& e, Sampler& g, int attempts) {
    for (int i = 0; i < attempts; ++i) {
        IdentityParams p = e.sample(g);
        if (admissible(e, p)) return p;
    }
    return std::nullopt;
}

std::optional<IdentityParams> draw_numeric(const IdentityEntry& e, size_t which, Sampler& g, int attempts) {
    if (which >= e.numeric.size()) return std::nullopt;
    for (int i = 0; i < attempts; ++i) {
        IdentityParams p = e.numeric[which].sample(g);
        if (sides_ok(e, p, long(which), nullptr)) return p;
    }
    return std::nullopt;
}

IdentityCheck verify_identity(const IdentityEntry& e, const IdentityParams& p, VerifyMode mode, int precision,
                              long budget) {
    check_constraints(e, p);
    return compare(catalog_sides(e, p), mode, precision, budget);
}

IdentityCheck verify_numeric_extension(const IdentityEntry& e, size_t which, const IdentityParams& p, int precision,
                                       long budget) {
    if (which >= e.numeric.size()) fail(ErrorKind::Unsupported, e.id + " has no such numeric extension");
    check_constraints(e, p);
    return compare(numeric_sides(e, which, p), VerifyMode::Numeric, precision, budget);
}

IdentityCheck verify_printed(const IdentityEntry& e, const IdentityParams& p) {
    if (!e.printed) fail(ErrorKind::Unsupported, e.id + " has no printed variant");
    const PrintedVariant& v = *e.printed;
    return compare(build_sides(v.lhs ? v.lhs : e.lhs, v.rhs, p), VerifyMode::Exact, 64);
}

// ---- master lemma ----

namespace {

std::vector<Rational> split(const std::vector<Rational>& a, long w) {
    std::vector<Rational> out;
    for (const auto& x : a)
        for (long j = 0; j < w; ++j) out.push_back((x + j) / w);
    return out;
}

// drop upper/lower pairs with equal values, keeping non-positive integers
void cancel_pairs(HyperSpec& s) {
    for (size_t i = 0; i < s.upper.size();) {
        bool gone = false;
        if (!is_nonpos_int(s.upper[i])) {
            for (size_t j = 0; j < s.lower.size(); ++j) {
                if (s.lower[j] == s.upper[i]) {
                    s.lower.erase(s.lower.begin() + long(j));
                    s.upper.erase(s.upper.begin() + long(i));
                    gone = true;
                    break;
                }
            }
        }
        if (!gone) ++i;
    }
}

std::optional<long> density_cutoff(const std::vector<Rational>& a, long u) {
    std::optional<long> best;
    for (const auto& x : a) {
        if (!is_nonpos_int(x)) continue;
        long k = to_long(-x) / u;
        if (!best || k < *best) best = k;
    }
    return best;
}

}  // namespace

MasterExpansion master_lemma_expand(const BaseTransform& t, const TransformParams& tp, const std::vector<Rational>& a,
                                    const std::vector<Rational>& b, long max_k) {
    t.validate(tp);
    MasterExpansion mx;
    mx.transform = t.id;
    mx.a = a;
    mx.b = b;
    HyperSpec R = t.rhs(tp);
    R.x = t.D;
    Rational lam = t.lambda_of(tp);

    std::optional<long> cut = termination_index(R);
    if (auto c = density_cutoff(a, t.u)) cut = cut ? std::min(*cut, *c) : *c;
    if (!cut) {
        Rational ex = parametric_excess(R) + lam;
        for (const auto& x : b) ex += x;
        for (const auto& x : a) ex -= x;
        if (!(t.v == 0 && t.D == 1 && ex > 0))
            fail(ErrorKind::ConditionsViolated, t.id + ": expansion neither terminates nor converges");
    }
    mx.finite = bool(cut);

    mx.lhs = t.lhs(tp);
    std::vector<Rational> sa = split(a, t.w), sb = split(b, t.w);
    mx.lhs.upper.insert(mx.lhs.upper.end(), sa.begin(), sa.end());
    mx.lhs.lower.insert(mx.lhs.lower.end(), sb.begin(), sb.end());
    mx.lhs.x = t.M * ipow(Rational(t.w), t.w * (long(a.size()) - long(b.size())));
    cancel_pairs(mx.lhs);

    long K = cut ? std::min(*cut, max_k) : max_k;
    std::vector<Rational> terms = series_terms(R, K + 1);
    for (long k = 0; k <= K; ++k) {
        MasterTerm m;
        m.k = k;
        m.coefficient = R.prefactor * terms[size_t(k)] * R.weight(Rational(k)) * poch(a, t.u * k) / poch(b, t.u * k);
        m.inner.upper = {-lam + t.v * k};
        for (const auto& x : a) m.inner.upper.push_back(x + t.u * k);
        for (const auto& x : b) m.inner.lower.push_back(x + t.u * k);
        mx.terms.push_back(std::move(m));
    }
    return mx;
}

Rational master_sum(const MasterExpansion& m) {
    Rational s(0);
    for (const auto& t : m.terms) {
        if (t.coefficient == 0) continue;
        SeriesValue v = eval_terminating(t.inner);
        s += t.coefficient * v.value.q;
    }
    return s;
}

Regeneration regenerate_rhs(const IdentityEntry& e, const IdentityParams& p, long max_k) {
    if (!e.derivation) fail(ErrorKind::Unsupported, e.id + ": no derivation metadata");
    const Derivation& dv = *e.derivation;
    const BaseTransform& t = base_transform(dv.transform);
    const SummationRule& rule = summation_rule(dv.rule);
    LemmaSetup s = dv.setup(p);
    MasterExpansion mx = master_lemma_expand(t, s.t, s.a, s.b, max_k);

    IdentitySide rside = e.rhs(p);
    HyperSpec lside = e.lhs(p);
    const HyperSpec& source = dv.reversed ? rside.series : lside;
    const HyperSpec& target = dv.reversed ? lside : rside.series;
    GammaRatio tpre = dv.reversed ? rside.prefactor.inverse() : rside.prefactor;

    Regeneration out;
    HyperSpec reduced = source;
    cancel_pairs(reduced);
    out.lhs_matches = same_parameters(mx.lhs, reduced) && mx.lhs.weight == source.weight;
    std::vector<Rational> tt = series_terms(target, max_k + 1);
    bool ok = out.lhs_matches;
    for (long k = 0; k <= max_k; ++k) {
        RegeneratedTerm r;
        r.k = k;
        Rational tk = target.prefactor * tt[size_t(k)] * target.weight(Rational(k));
        r.printed = evaluate(tpre * tk);
        const MasterTerm* m = k < long(mx.terms.size()) ? &mx.terms[size_t(k)] : nullptr;
        if (!m || m->coefficient == 0) {
            r.regenerated = Scalar(Rational(0));
            r.matches = tk == 0;
        } else {
            SumArgs args = dv.bind(p, k);
            if (!rule.matches(m->inner, args))
                fail(ErrorKind::SummationPatternMismatch,
                     e.id + ": inner series " + m->inner.str() + " is not " + rule.id + " at " + args.str());
            try {
                rule.validate(args);
            } catch (const MathError& err) {
                // poles in the closed form are a degenerate sample, not a bad binding
                ErrorKind k = err.kind();
                if (k == ErrorKind::PoleInQuotient || k == ErrorKind::DegenerateParameters || k == ErrorKind::LowerPole)
                    throw;
                fail(ErrorKind::SummationPatternMismatch, e.id + ": " + err.what());
            }
            GammaRatio g = rule.closed_form(args) * m->coefficient;
            r.regenerated = evaluate(g);
            if (tk == 0) {
                r.matches = reduce(g).factor == 0;
            } else {
                GammaRatio q = reduce(g / (tpre * tk));
                r.matches = q.is_exact() && q.exact_value() == 1;
            }
        }
        ok = ok && r.matches;
        out.terms.push_back(std::move(r));
    }
    out.passed = ok;
    return out;
}

// ---- adjudication ----

namespace {

// Rakha-Rathie closed form with the Ω and μ pieces optionally mirrored b1 <-> b2.
Rational rr_value(const SumArgs& a, bool mirror_omega, bool mirror_mu) {
    const Rational &b1 = a.b1, &b2 = a.b2, &l = a.lambda, &a2 = a.a2, &b3 = a.b3;
    long n = a.n, k = a.k;
    Rational X = n * a2 * (b3 + l) + b3 * (b1 + l - 1) * (b2 + l - 1);
    const Rational& x = mirror_omega ? b2 : b1;
    const Rational& y = mirror_omega ? b1 : b2;
    Rational om = X * poch(x + l, n - 1) * poch(y + l, n) / (b3 * (1 + a2 - x) * poch(b1, n) * poch(b2, n));
    const Rational& z = mirror_mu ? b2 : b1;
    Rational mu = X / (l * (b3 - z + 1) - (z + n - 1) * (z - a2 - 1));
    return om * poch(b1, k) * poch(b2, k) * poch(b3, k) * poch(mu + 1, k) /
           (poch(b1 + l, k) * poch(b2 + l, k) * poch(b3 + 1, k) * poch(mu, k));
}

Adjudication rr_adjudication(bool omega, int samples, Sampler& g) {
    const SummationRule& r = summation_rule("rakha_rathie");
    Adjudication a;
    a.entry = "rakha_rathie";
    a.subject = omega ? "Omega factor (b1+lambda)_{n-1} (b2+lambda)_n / (1+a2-b1), asymmetric in b1, b2"
                      : "mu denominator lambda(b3-b1+1) - (b1+n-1)(b1-a2-1), asymmetric in b1, b2";
    for (int tries = 0; a.checks < samples && tries < 50 * samples; ++tries) {
        SumArgs s = r.sample(g);
        Rational brute, printed, mirrored;
        try {
            r.validate(s);
            brute = eval_terminating(r.lhs(s)).value.q;
            printed = r.apply(s).q;
            mirrored = rr_value(s, omega, !omega);
        } catch (const std::exception&) {
            continue;
        }
        ++a.checks;
        a.printed_failures += printed != brute;
        a.corrected_failures += mirrored != brute;
    }
    if (a.printed_failures == 0)
        a.verdict = a.corrected_failures == 0 ? "printed form holds; the b1<->b2 mirror agrees under the balance"
                                              : "printed form holds; the b1<->b2 mirror does not";
    else
        a.verdict = "printed form fails the exact oracle";
    return a;
}

}  // namespace

std::vector<Adjudication> adjudicate_all(int samples, std::uint64_t seed) {
    Sampler g(seed);
    std::vector<Adjudication> out;
    out.push_back(rr_adjudication(true, samples, g));
    out.push_back(rr_adjudication(false, samples, g));
    for (const auto& e : catalog_identities()) {
        if (!e.printed) continue;
        const PrintedVariant& v = *e.printed;
        Adjudication a;
        a.entry = e.id;
        a.subject = v.what;
        auto draw = v.sample ? v.sample : e.sample;
        for (int tries = 0; a.checks < samples && tries < 400 * samples; ++tries) {
            IdentityParams p = draw(g);
            if (!admissible(e, p)) continue;
            bool printed_ok, fixed_ok;
            try {
                fixed_ok = verify_identity(e, p, VerifyMode::Exact, 64).passed;
                printed_ok = verify_printed(e, p).passed;
            } catch (const std::exception&) {
                continue;
            }
            ++a.checks;
            a.printed_failures += !printed_ok;
            a.corrected_failures += !fixed_ok;
        }
        if (a.printed_failures > 0 && a.corrected_failures == 0)
            a.verdict = "misprint: printed form fails, corrected form holds";
        else if (a.printed_failures == 0)
            a.verdict = "printed form holds";
        else
            a.verdict = "unresolved: corrected form also fails";
        out.push_back(std::move(a));
    }
    return out;
}

// ---- limits ----

namespace {

Real value_of(const HyperSpec& s, int precision) {
    EvalOptions opt;
    opt.precision = precision;
    return evaluate(s, opt).value.approx();
}

LimitStudy run_limit(std::string entry, std::string parent, std::string path, const std::vector<long>& ns, Real limit,
                     const std::function<HyperSpec(long)>& at, int precision) {
    LimitStudy st{std::move(entry), std::move(parent), std::move(path), {}, true, Real(0)};
    for (long n : ns) {
        Real v = value_of(at(n), precision);
        Real d = abs(v - limit) / abs(limit);
        if (!st.steps.empty() && !(d < st.steps.back().discrepancy)) st.monotone = false;
        st.steps.push_back({n, d});
    }
    if (!st.steps.empty()) st.final_discrepancy = st.steps.back().discrepancy;
    return st;
}

}  // namespace

std::vector<LimitStudy> limit_studies(const std::vector<long>& ns, int precision) {
    WorkingPrecision wp(precision);
    std::vector<LimitStudy> out;
    const Rational a(1, 3), b(-2, 5), c(7, 4), d(2, 7), e(5, 3), f(3, 8), h(4, 9);

    {
        // Tannery: the terminating series at n tends to the non-terminating one
        IdentityParams q;
        q["a"] = a, q["b"] = b, q["c"] = c, q["d"] = d, q["e"] = e, q["f"] = f;
        Real lim = value_of(identity("I-8").lhs(q), precision);
        out.push_back(run_limit("I-8", "I-7", "n -> infinity, g = 2-e-n+d-c+a+b", ns, lim,
                                [=](long n) {
                                    IdentityParams r = q;
                                    r.n = n;
                                    r.f = {f};
                                    r.m = {1};
                                    r["g"] = 2 - e - n + d - c + a + b;
                                    return identity("I-7").lhs(r);
                                },
                                precision));
    }
    {
        IdentityParams q;
        q["b"] = b, q["d"] = d, q["e"] = e, q["f"] = f, q["g"] = Rational(9, 4);
        q.n = 3;
        Rational kappa = 2 - e - q.n + d + b - q["g"];
        Real lim = value_of(identity("I-9").lhs(q), precision);
        out.push_back(run_limit("I-9", "I-7", "a = n, c = a + (2-e-n+d+b-g)", ns, lim,
                                [=](long L) {
                                    IdentityParams r = q;
                                    r["a"] = Rational(L);
                                    r["c"] = L + kappa;
                                    r.f = {f};
                                    r.m = {1};
                                    return identity("I-7").lhs(r);
                                },
                                precision));
    }
    {
        IdentityParams q;
        q["a"] = a, q["b"] = b, q["c"] = c, q["d"] = d, q["e"] = e;
        q.n = 3;
        q["g"] = 2 - e - c - q.n + a + b + d;
        Real lim = value_of(identity("I-10").lhs(q), precision);
        out.push_back(run_limit("I-10", "I-7", "f = n", ns, lim,
                                [=](long L) {
                                    IdentityParams r = q;
                                    r.f = {Rational(L)};
                                    r.m = {1};
                                    return identity("I-7").lhs(r);
                                },
                                precision));
    }
    {
        IdentityParams q;
        q["b"] = b, q["d"] = d, q["e"] = e, q["f"] = f, q["g"] = Rational(9, 4), q["h"] = h;
        q.n = 3;
        Rational kappa = q["g"] + e + q.n - d - b - 1;
        Real lim = value_of(identity("I-14").lhs(q), precision);
        out.push_back(run_limit("I-14", "I-13", "a = n, c = a + (g+e+n-d-b-1)", ns, lim,
                                [=](long L) {
                                    IdentityParams r = q;
                                    r["a"] = Rational(L);
                                    r["c"] = L + kappa;
                                    r.f = {f};
                                    r.m = {1};
                                    return identity("I-13").lhs(r);
                                },
                                precision));
    }
    {
        const IdentityEntry& iv10 = identity("IV-10");
        IdentityParams q;
        q["A"] = Rational(1, 3), q["B"] = Rational(-2, 5), q["C"] = Rational(2, 7), q["D"] = Rational(3, 8),
        q["E"] = Rational(-1, 6), q["G"] = Rational(5, 4);
        Real lim = value_of(iv10.numeric.at(0).lhs(q), precision);
        out.push_back(run_limit("IV-10 (F -> infinity)", "IV-10", "F = -n", ns, lim,
                                [=](long L) {
                                    IdentityParams r = q;
                                    r["F"] = Rational(-L);
                                    return iv10.lhs(r);
                                },
                                precision));
    }
    return out;
}

}  // namespace hyperforge
