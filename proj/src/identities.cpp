#include "tjq/identities.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <random>
#include <stdexcept>
#include <thread>
#include <utility>

namespace tjq {

namespace {

struct IdMeta {
    IdentityId id;
    std::string_view name;
    ParamShape shape;
    // Lower bound on n in the identity's statement; checks below it are
    // evaluated anyway and flagged informative.
    std::optional<Index> stated_min_n;
    // Hard precondition: the left side is undefined below n = 0.
    bool hard_nonneg_n = false;
    // Stated for n >= a (the Catalan range).
    bool stated_n_ge_a = false;
};

const std::array<IdMeta, 27>& metas() {
    static const std::array<IdMeta, 27> table = {{
        {IdentityId::shift3_j, "shift3_j", ParamShape::n, 0, false, false},
        {IdentityId::shift3_k, "shift3_k", ParamShape::n, 0, false, false},
        {IdentityId::binet_j, "binet_j", ParamShape::n, 0, false, false},
        {IdentityId::binet_k, "binet_k", ParamShape::n, 0, false, false},
        {IdentityId::genfun_j, "genfun_j", ParamShape::n, std::nullopt, true, false},
        {IdentityId::genfun_k, "genfun_k", ParamShape::n, std::nullopt, true, false},
        {IdentityId::vajda_j, "vajda_j", ParamShape::nab, std::nullopt, false, false},
        {IdentityId::vajda_k, "vajda_k", ParamShape::nab, std::nullopt, false, false},
        {IdentityId::catalan_j, "catalan_j", ParamShape::na, std::nullopt, false, true},
        {IdentityId::catalan_k, "catalan_k", ParamShape::na, std::nullopt, false, true},
        {IdentityId::cassini_j, "cassini_j", ParamShape::n, 1, false, false},
        {IdentityId::cassini_k, "cassini_k", ParamShape::n, 1, false, false},
        {IdentityId::docagne_j, "docagne_j", ParamShape::na, std::nullopt, false, false},
        {IdentityId::docagne_k, "docagne_k", ParamShape::na, std::nullopt, false, false},
        {IdentityId::triplesum_j, "triplesum_j", ParamShape::n, 0, false, false},
        {IdentityId::triplesum_k, "triplesum_k", ParamShape::n, 0, false, false},
        {IdentityId::k_from_j, "k_from_j", ParamShape::n, 0, false, false},
        {IdentityId::j_from_k, "j_from_k", ParamShape::n, 0, false, false},
        {IdentityId::partial_sum_j, "partial_sum_j", ParamShape::n, std::nullopt, true, false},
        {IdentityId::partial_sum_k, "partial_sum_k", ParamShape::n, std::nullopt, true, false},
        {IdentityId::shift2m4_j, "shift2m4_j", ParamShape::n, 0, false, false},
        {IdentityId::shift2m4_k, "shift2m4_k", ParamShape::n, 0, false, false},
        {IdentityId::comb_plus, "comb_plus", ParamShape::n, 0, false, false},
        {IdentityId::comb_minus, "comb_minus", ParamShape::n, 0, false, false},
        {IdentityId::prod_m1, "prod_m1", ParamShape::none, std::nullopt, false, false},
        {IdentityId::prod_m2, "prod_m2", ParamShape::none, std::nullopt, false, false},
        {IdentityId::prod_m3, "prod_m3", ParamShape::none, std::nullopt, false, false},
    }};
    return table;
}

const IdMeta& meta(IdentityId id) {
    for (const auto& m : metas())
        if (m.id == id) return m;
    throw std::invalid_argument("unknown identity id");
}

void validate_params(const IdMeta& m, const IdentityParams& p) {
    auto fail = [&] {
        throw std::invalid_argument(std::string("identity ") + std::string(m.name) +
                                    " takes exactly the parameters its statement quantifies over");
    };
    switch (m.shape) {
        case ParamShape::none:
            if (p.n || p.a || p.b) fail();
            break;
        case ParamShape::n:
            if (!p.n || p.a || p.b) fail();
            break;
        case ParamShape::na:
            if (!p.n || !p.a || p.b) fail();
            break;
        case ParamShape::nab:
            if (!p.n || !p.a || !p.b) fail();
            break;
    }
    if (m.hard_nonneg_n && *p.n < 0)
        throw std::invalid_argument(std::string(m.name) + " requires n >= 0");
}

bool classify_informative(const IdMeta& m, const IdentityParams& p) {
    if (m.stated_min_n && *p.n < *m.stated_min_n) return true;
    if (m.stated_n_ge_a && *p.n < *p.a) return true;
    return false;
}

Quaternion xs(int x, const Quaternion& q) {
    if (x == 0) return Quaternion::zero(q.sig());
    return x > 0 ? q : -q;
}

Rational frac(long num, long den) { return Rational(BigInt(num), BigInt(den)); }

// Right sides of the two-parameter product identities, exactly as displayed.
Quaternion vajda_rhs(Index n, Index a, Index b, const LambdaSig& sig, BinetFamily fam) {
    Quaternion theta = named_constant(ConstName::Theta, sig);
    Quaternion omega = named_constant(ConstName::Omega, sig);
    Quaternion xi =
        named_constant(fam == BinetFamily::j ? ConstName::Xi : ConstName::XiStar, sig);
    const long w = (fam == BinetFamily::j) ? 14 : 6;
    Quaternion geom = (theta * helper_y(n + b, a, sig, fam) -
                       (helper_y(n, a, sig, fam) * theta).scaled(pow2(b)))
                          .scaled(fam == BinetFamily::j ? pow2(n + 1) : pow2(n));
    Quaternion cyc = xs(x_cyclic(a), xs(x_cyclic(b), xi) -
                                         omega.scaled(Rational(w * x_cyclic(b + 2))));
    Quaternion sum = geom + cyc;
    return (fam == BinetFamily::j) ? sum.scaled(frac(1, 49)) : sum;
}

Quaternion catalan_rhs(Index n, Index a, const LambdaSig& sig, BinetFamily fam) {
    Quaternion theta = named_constant(ConstName::Theta, sig);
    Quaternion omega = named_constant(ConstName::Omega, sig);
    Quaternion xi =
        named_constant(fam == BinetFamily::j ? ConstName::Xi : ConstName::XiStar, sig);
    const long w = (fam == BinetFamily::j) ? 14 : 6;
    Quaternion geom = (theta * helper_y(n - a, a, sig, fam) -
                       (helper_y(n, a, sig, fam) * theta).scaled(pow2(-a)))
                          .scaled(fam == BinetFamily::j ? pow2(n + 1) : pow2(n));
    Quaternion cyc = xs(x_cyclic(a), xs(x_cyclic(a), xi) -
                                         omega.scaled(Rational(w * x_cyclic(a + 1))));
    Quaternion diff = geom - cyc;
    return (fam == BinetFamily::j) ? diff.scaled(frac(1, 49)) : diff;
}

Quaternion cassini_rhs(Index n, const LambdaSig& sig, BinetFamily fam) {
    Quaternion theta = named_constant(ConstName::Theta, sig);
    Quaternion omega = named_constant(ConstName::Omega, sig);
    if (fam == BinetFamily::j) {
        Quaternion xi = named_constant(ConstName::Xi, sig);
        Quaternion geom = ((theta * helper_y(n - 1, 1, sig, fam)).scaled(Rational(2)) -
                           helper_y(n, 1, sig, fam) * theta)
                              .scaled(pow2(n));
        return (geom - (xi + omega.scaled(Rational(14)))).scaled(frac(1, 49));
    }
    Quaternion xis = named_constant(ConstName::XiStar, sig);
    Quaternion geom = ((theta * helper_y(n - 1, 1, sig, fam)).scaled(Rational(2)) -
                       helper_y(n, 1, sig, fam) * theta)
                          .scaled(pow2(n - 1));
    return geom - (xis + omega.scaled(Rational(6)));
}

using LegList = std::vector<std::pair<Quaternion, Quaternion>>;

LegList build_legs(IdentityId id, const IdentityParams& p, const LambdaSig& sig,
                   const Rational& k0) {
    auto JG = [&](Index i) { return jg(i, sig); };
    auto KG = [&](Index i) { return kg(i, sig, k0); };
    Quaternion theta = named_constant(ConstName::Theta, sig);
    const Index n = p.n.value_or(0);
    const Index a = p.a.value_or(0);
    const Index b = p.b.value_or(0);

    switch (id) {
        case IdentityId::shift3_j:
            return {{JG(n + 3), JG(n) + theta.scaled(pow2(n + 1))}};
        case IdentityId::shift3_k:
            return {{KG(n + 3), KG(n) + theta.scaled(Rational(7) * pow2(n))}};
        case IdentityId::binet_j:
            return {{JG(n), jg_binet(n, sig)}, {JG(n), jg_binet_cases(n, sig)}};
        case IdentityId::binet_k:
            return {{KG(n), kg_binet(n, sig)}, {KG(n), kg_binet_cases(n, sig)}};
        case IdentityId::genfun_j:
            return {{JG(n), genfun_coeffs(QuatSeqKind::jg, sig, static_cast<std::size_t>(n) + 1)
                                .back()}};
        case IdentityId::genfun_k:
            return {{KG(n), genfun_coeffs(QuatSeqKind::kg, sig, static_cast<std::size_t>(n) + 1)
                                .back()}};
        case IdentityId::vajda_j:
            return {{JG(n + a) * JG(n + b) - JG(n) * JG(n + a + b),
                     vajda_rhs(n, a, b, sig, BinetFamily::j)}};
        case IdentityId::vajda_k:
            return {{KG(n + a) * KG(n + b) - KG(n) * KG(n + a + b),
                     vajda_rhs(n, a, b, sig, BinetFamily::k)}};
        case IdentityId::catalan_j:
            return {{JG(n + a) * JG(n - a) - JG(n) * JG(n),
                     catalan_rhs(n, a, sig, BinetFamily::j)}};
        case IdentityId::catalan_k:
            return {{KG(n + a) * KG(n - a) - KG(n) * KG(n),
                     catalan_rhs(n, a, sig, BinetFamily::k)}};
        case IdentityId::cassini_j:
            return {{JG(n + 1) * JG(n - 1) - JG(n) * JG(n),
                     cassini_rhs(n, sig, BinetFamily::j)}};
        case IdentityId::cassini_k:
            return {{KG(n + 1) * KG(n - 1) - KG(n) * KG(n),
                     cassini_rhs(n, sig, BinetFamily::k)}};
        case IdentityId::docagne_j: {
            const Index m = n + a; // second index of the pair being compared
            return {{JG(m) * JG(n + 1) - JG(n) * JG(m + 1),
                     vajda_rhs(n, a, 1, sig, BinetFamily::j)}};
        }
        case IdentityId::docagne_k: {
            const Index m = n + a;
            return {{KG(m) * KG(n + 1) - KG(n) * KG(m + 1),
                     vajda_rhs(n, a, 1, sig, BinetFamily::k)}};
        }
        case IdentityId::triplesum_j:
            return {{JG(n) + JG(n + 1) + JG(n + 2), theta.scaled(pow2(n + 1))}};
        case IdentityId::triplesum_k:
            return {{KG(n) + KG(n + 1) + KG(n + 2), theta.scaled(Rational(7) * pow2(n))}};
        case IdentityId::k_from_j:
            return {{KG(n + 2), JG(n + 2) + JG(n + 1).scaled(Rational(2)) +
                                    JG(n).scaled(Rational(6))}};
        case IdentityId::j_from_k:
            return {{JG(n + 2), (KG(n + 2).scaled(Rational(13)) + KG(n + 1).scaled(Rational(48)) +
                                 KG(n).scaled(Rational(20)))
                                    .scaled(frac(1, 147))}};
        case IdentityId::partial_sum_j: {
            Quaternion acc = Quaternion::zero(sig);
            for (Index l = 0; l <= n; ++l) acc += JG(l);
            Quaternion corr = Quaternion::from_rationals(sig, 1, 1, 4, 7);
            return {{acc,
                     (JG(n + 2) + JG(n).scaled(Rational(2)) - corr).scaled(frac(1, 3))}};
        }
        case IdentityId::partial_sum_k: {
            Quaternion acc = Quaternion::zero(sig);
            for (Index l = 0; l <= n; ++l) acc += KG(l);
            Quaternion corr = Quaternion::from_rationals(sig, 0, 9, 12, 21);
            return {{acc,
                     (KG(n + 2) + KG(n).scaled(Rational(2)) - corr).scaled(frac(1, 3))}};
        }
        case IdentityId::shift2m4_j: {
            Quaternion A = named_constant(ConstName::BinetA, sig);
            Quaternion B = named_constant(ConstName::BinetB, sig);
            Quaternion rhs = (xs(x_cyclic(n), A.scaled(Rational(5)) + B) +
                              xs(x_cyclic(n + 1), A - B.scaled(Rational(4))))
                                 .scaled(frac(-1, 7));
            return {{JG(n + 2) - JG(n).scaled(Rational(4)), rhs}};
        }
        case IdentityId::shift2m4_k: {
            Quaternion C = named_constant(ConstName::BinetC, sig);
            Quaternion D = named_constant(ConstName::BinetD, sig);
            Quaternion rhs = -xs(x_cyclic(n), C.scaled(Rational(5)) + D) -
                             xs(x_cyclic(n + 1), C - D.scaled(Rational(4)));
            return {{KG(n + 2) - KG(n).scaled(Rational(4)), rhs}};
        }
        case IdentityId::comb_plus: {
            Quaternion A = named_constant(ConstName::BinetA, sig);
            Quaternion B = named_constant(ConstName::BinetB, sig);
            Quaternion C = named_constant(ConstName::BinetC, sig);
            Quaternion D = named_constant(ConstName::BinetD, sig);
            return {{JG(n).scaled(Rational(7)) + KG(n),
                     theta.scaled(Rational(3) * pow2(n)) + xs(x_cyclic(n), A + C) -
                         xs(x_cyclic(n + 1), B + D)}};
        }
        case IdentityId::comb_minus: {
            Quaternion A = named_constant(ConstName::BinetA, sig);
            Quaternion B = named_constant(ConstName::BinetB, sig);
            Quaternion C = named_constant(ConstName::BinetC, sig);
            Quaternion D = named_constant(ConstName::BinetD, sig);
            return {{JG(n).scaled(Rational(7)) - KG(n),
                     theta.scaled(pow2(n)) + xs(x_cyclic(n), A - C) -
                         xs(x_cyclic(n + 1), B - D)}};
        }
        case IdentityId::prod_m1: {
            Quaternion A = named_constant(ConstName::BinetA, sig);
            Quaternion B = named_constant(ConstName::BinetB, sig);
            Quaternion psi = named_constant(ConstName::Psi, sig);
            Quaternion om7 = named_constant(ConstName::Omega, sig).scaled(Rational(7));
            return {{B * A, psi + om7}, {A * B, psi - om7}};
        }
        case IdentityId::prod_m2: {
            Quaternion C = named_constant(ConstName::BinetC, sig);
            Quaternion D = named_constant(ConstName::BinetD, sig);
            Quaternion phi = named_constant(ConstName::Phi, sig);
            Quaternion om3 = named_constant(ConstName::Omega, sig).scaled(Rational(3));
            return {{D * C, phi + om3}, {C * D, phi - om3}};
        }
        case IdentityId::prod_m3: {
            Quaternion A = named_constant(ConstName::BinetA, sig);
            Quaternion B = named_constant(ConstName::BinetB, sig);
            Quaternion C = named_constant(ConstName::BinetC, sig);
            Quaternion D = named_constant(ConstName::BinetD, sig);
            Quaternion omega = named_constant(ConstName::Omega, sig);
            return {{B * A, A * B + omega.scaled(Rational(14))},
                    {D * C, C * D + omega.scaled(Rational(6))}};
        }
    }
    throw std::invalid_argument("unknown identity id");
}

std::optional<std::array<Rational, 3>> lambda_point_of(const LambdaSig& sig) {
    if (sig.mode() == RingMode::symbolic) return std::nullopt;
    return std::array<Rational, 3>{sig.l1().rational(), sig.l2().rational(),
                                   sig.l3().rational()};
}

} // namespace

const std::vector<IdentityId>& identity_catalog() {
    static const std::vector<IdentityId> ids = [] {
        std::vector<IdentityId> v;
        for (const auto& m : metas()) v.push_back(m.id);
        return v;
    }();
    return ids;
}

std::string_view identity_name(IdentityId id) { return meta(id).name; }

std::optional<IdentityId> identity_from_name(std::string_view name) {
    for (const auto& m : metas())
        if (m.name == name) return m.id;
    return std::nullopt;
}

ParamShape identity_param_shape(IdentityId id) { return meta(id).shape; }

VerificationResult check_identity(IdentityId id, const IdentityParams& params,
                                  const LambdaSig& sig, const CheckOptions& opts) {
    const IdMeta& m = meta(id);
    validate_params(m, params);
    const Rational k0 = opts.k0_paper ? Rational(0) : Rational(3);
    LegList legs = build_legs(id, params, sig, k0);
    std::size_t report = 0;
    bool pass = true;
    for (std::size_t i = 0; i < legs.size(); ++i) {
        if ((legs[i].first - legs[i].second).is_zero()) continue;
        pass = false;
        report = i;
        break;
    }
    return VerificationResult{id,
                              params,
                              lambda_point_of(sig),
                              std::move(legs[report].first),
                              std::move(legs[report].second),
                              pass,
                              classify_informative(m, params)};
}

std::vector<std::array<Rational, 3>> sample_lambda_points(std::uint64_t seed, std::size_t count) {
    std::vector<std::array<Rational, 3>> points = {
        {Rational(1), Rational(1), Rational(1)},   // Hamilton
        {Rational(1), Rational(1), Rational(-1)},  // split
        {Rational(1), Rational(1), Rational(0)},   // semi
        {Rational(1), Rational(-1), Rational(0)},  // split semi
    };
    std::mt19937_64 gen(seed);
    std::uniform_int_distribution<int> dist(-9, 9);
    auto draw = [&] {
        int num = dist(gen);
        int den = 0;
        while (den == 0) den = dist(gen);
        return Rational(BigInt(num), BigInt(den));
    };
    for (std::size_t i = 0; i < count; ++i) {
        Rational l1 = draw(), l2 = draw(), l3 = draw();
        points.push_back({l1, l2, l3});
    }
    return points;
}

std::vector<VerificationResult> run_suite(const SuiteOptions& options) {
    struct Task {
        IdentityId id;
        IdentityParams params;
        std::size_t sig_index;
    };

    std::vector<LambdaSig> sigs;
    if (options.symbolic) {
        sigs.push_back(LambdaSig::symbolic());
    } else {
        for (const auto& p : options.points) sigs.push_back(LambdaSig::point(p[0], p[1], p[2]));
    }

    std::vector<Task> tasks;
    for (IdentityId id : options.ids) {
        const IdMeta& m = meta(id);
        const Index n_lo = m.hard_nonneg_n ? std::max<Index>(0, options.n_from) : options.n_from;
        for (std::size_t s = 0; s < sigs.size(); ++s) {
            switch (m.shape) {
                case ParamShape::none:
                    tasks.push_back({id, {}, s});
                    break;
                case ParamShape::n:
                    for (Index n = n_lo; n <= options.n_to; ++n)
                        tasks.push_back({id, {n, std::nullopt, std::nullopt}, s});
                    break;
                case ParamShape::na:
                    for (Index n = n_lo; n <= options.n_to; ++n)
                        for (Index a = options.a_from; a <= options.a_to; ++a)
                            tasks.push_back({id, {n, a, std::nullopt}, s});
                    break;
                case ParamShape::nab:
                    for (Index n = n_lo; n <= options.n_to; ++n)
                        for (Index a = options.a_from; a <= options.a_to; ++a)
                            for (Index b = options.b_from; b <= options.b_to; ++b)
                                tasks.push_back({id, {n, a, b}, s});
                    break;
            }
        }
    }

    std::vector<std::optional<VerificationResult>> slots(tasks.size());
    unsigned thread_count = options.threads != 0 ? options.threads
                                                 : std::max(1u, std::thread::hardware_concurrency());
    thread_count = std::min<unsigned>(thread_count,
                                      std::max<std::size_t>(std::size_t{1}, tasks.size()));

    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            try {
                slots[i] = check_identity(tasks[i].id, tasks[i].params, sigs[tasks[i].sig_index],
                                          options.check);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
                return;
            }
        }
    };

    if (thread_count <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(thread_count);
        for (unsigned t = 0; t < thread_count; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    if (error) std::rethrow_exception(error);

    std::vector<VerificationResult> results;
    results.reserve(tasks.size());
    for (auto& s : slots) results.push_back(std::move(*s));

    auto hard_fail = [](const VerificationResult& r) { return !r.pass && !r.informative; };
    auto info_fail = [](const VerificationResult& r) { return !r.pass; };
    auto mid = std::stable_partition(results.begin(), results.end(), hard_fail);
    std::stable_partition(mid, results.end(), info_fail);
    return results;
}

std::vector<IdTotals> summarize(const std::vector<VerificationResult>& results) {
    std::vector<IdTotals> totals;
    for (IdentityId id : identity_catalog()) {
        IdTotals t;
        t.id = id;
        for (const auto& r : results) {
            if (r.id != id) continue;
            ++t.checked;
            if (r.informative)
                ++t.informative;
            else if (r.pass)
                ++t.passed;
            else
                ++t.failed;
        }
        if (t.checked != 0) totals.push_back(t);
    }
    return totals;
}

} // namespace tjq
