#include "qseries/catalog.hpp"

#include <algorithm>
#include <utility>

#include "qseries/b_sequence.hpp"
#include "qseries/eta_parser.hpp"

namespace qseries {

std::string to_string(IdentityKind kind)
{
    switch (kind) {
    case IdentityKind::series_identity:
        return "series-identity";
    case IdentityKind::coefficient_identity:
        return "coefficient-identity";
    case IdentityKind::congruence:
        return "congruence";
    case IdentityKind::integer_identity:
        return "integer-identity";
    }
    return "unknown";
}

LaurentSeries SeriesCache::get(const EtaQuotient& eq, Exponent prec)
{
    Slot* slot = nullptr;
    {
        std::lock_guard lock(slots_mutex_);
        auto& entry = slots_[eq.to_string()];
        if (!entry) entry = std::make_unique<Slot>();
        slot = entry.get();
    }
    std::lock_guard lock(slot->mutex);
    if (!slot->value || slot->value->prec() < prec) slot->value = expand(eq, prec);
    return truncate(*slot->value, prec);
}

LaurentSeries progression(const LaurentSeries& a, std::int64_t step, std::int64_t offset)
{
    if (offset < 0) throw DomainError("progression offset must be >= 0");
    return drop_below(dissect(shift(a, -offset), step, 0), 0);
}

LaurentSeries a5_dissection_chain(const LaurentSeries& a5_pairs, std::int64_t k)
{
    LaurentSeries s = a5_pairs;
    for (std::int64_t i = 0; i < k; ++i) s = dissect(shift(s, -2), 2, 0);
    return s;
}

namespace {

using Pair = std::pair<LaurentSeries, LaurentSeries>;

LaurentSeries eta(std::string_view text, Exponent prec)
{
    return expand(parse_eta_quotient(text), prec);
}

LaurentSeries one(Exponent prec) { return monomial(0, 1, prec); }

LaurentSeries constant(const Integer& c, Exponent prec) { return prec > 0 ? monomial(0, c, prec) : LaurentSeries(prec); }

std::int64_t pow2(std::int64_t e) { return std::int64_t{1} << e; }

// Builds both sides at some working precision, raising it until both sides
// are known below q^order, then truncates to exactly that order. `scale`
// is how many input exponents each missing output exponent costs.
template <class Fn>
Pair at_order(Exponent order, Exponent start, std::int64_t scale, Fn&& fn)
{
    Exponent base = start;
    for (int attempt = 0; attempt < 16; ++attempt) {
        auto [lhs, rhs] = fn(base);
        const Exponent got = std::min(lhs.prec(), rhs.prec());
        if (got >= order) return {truncate(lhs, order), truncate(rhs, order)};
        base += (order - got) * scale;
    }
    throw InternalConsistencyError("working precision did not converge");
}

BuiltIdentity series_identity(Pair sides)
{
    return {IdentityKind::series_identity, std::move(sides.first), std::move(sides.second), std::nullopt};
}

BuiltIdentity coefficient_identity(Pair sides)
{
    return {IdentityKind::coefficient_identity, std::move(sides.first), std::move(sides.second),
            std::nullopt};
}

BuiltIdentity integer_identity(const Integer& lhs, const Integer& rhs, Exponent order)
{
    return {IdentityKind::integer_identity, truncate(constant(lhs, 1), order),
            truncate(constant(rhs, 1), order), std::nullopt};
}

// Relation in k(q) and friends checked against the zero series.
BuiltIdentity relation(Exponent order, const std::function<LaurentSeries(Exponent)>& fn)
{
    return series_identity(at_order(order, std::max<Exponent>(order, 2), 1, [&](Exponent p) {
        LaurentSeries lhs = fn(p);
        LaurentSeries rhs(lhs.prec());
        return Pair{std::move(lhs), std::move(rhs)};
    }));
}

std::int64_t single_param(const std::string& name, const std::vector<std::int64_t>& params,
                          const ParamSpec& spec)
{
    if (params.size() != 1) {
        throw InvalidParams(name + " takes exactly one parameter (" + spec.name + ")");
    }
    if (params[0] < spec.min) {
        throw InvalidParams(name + " needs " + spec.name + " >= " + std::to_string(spec.min));
    }
    if (params[0] > 62) throw InvalidParams(name + ": parameter too large");
    return params[0];
}

} // namespace

LaurentSeries a5_dissection_closed_form(std::int64_t k, Exponent prec)
{
    if (k < 1) throw DomainError("the family starts at k = 1");
    const Integer bk = b_value(k);
    const Integer bk1 = b_value(k - 1);
    const Integer c1 = eight_power_term(k + 1);
    Integer eight_k1;
    mpz_ui_pow_ui(eight_k1.get_mpz_t(), 8, static_cast<unsigned long>(k + 1));
    const Integer c2 = exact_quotient(eight_k1 - 8, 7);
    return bk * eta("f1^4*f5^4/q", prec) - Integer(8 * bk1) * eta("f2^4*f10^4", prec) +
           c1 * eta("f5^10/f1^2", prec) - c2 * eta("q^2*f10^10/f2^2", prec);
}

Catalog::Catalog() : Catalog(std::make_shared<SeriesCache>()) {}

Catalog::Catalog(std::shared_ptr<SeriesCache> cache) : cache_(std::move(cache)) { register_entries(); }

const IdentityInfo& Catalog::info(const std::string& name) const
{
    for (const auto& e : entries_) {
        if (e.name == name) return e;
    }
    throw UnknownIdentity("unknown catalog entry '" + name + "'");
}

bool Catalog::contains(const std::string& name) const { return builders_.count(name) != 0; }

BuiltIdentity Catalog::build(const std::string& name, const std::vector<std::int64_t>& params,
                             Exponent order) const
{
    const auto& entry = info(name);
    if (!entry.param && !params.empty()) throw InvalidParams(name + " takes no parameters");
    return builders_.at(name)(params, order);
}

std::vector<std::vector<std::int64_t>> Catalog::default_params(const std::string& name) const
{
    const auto& entry = info(name);
    if (!entry.param) return {{}};
    std::vector<std::vector<std::int64_t>> out;
    for (auto v = entry.param->min; v <= entry.param->sweep_max; ++v) out.push_back({v});
    return out;
}

void Catalog::add(IdentityInfo info, Builder builder)
{
    if (builders_.count(info.name) != 0) throw CatalogError("duplicate catalog entry " + info.name);
    builders_.emplace(info.name, std::move(builder));
    entries_.push_back(std::move(info));
}

void Catalog::register_entries()
{
    using K = IdentityKind;
    SeriesCache& cache = *cache_;
    const EtaQuotient partitions_gf(0, {{1, -1}});
    const EtaQuotient a3 = core_quotient(3, false);
    const EtaQuotient a5 = core_quotient(5, false);
    const EtaQuotient pairs3 = core_quotient(3, true);
    const EtaQuotient pairs5 = core_quotient(5, true);

    // Ramanujan's congruences for p(n).
    for (const auto& [m_, r_] : std::vector<std::pair<int, int>>{{5, 4}, {7, 5}, {11, 6}}) {
        const int modulus = m_;
        const int residue = r_;
        const std::string name = "P-CONG-" + std::to_string(modulus);
        add({name, K::congruence,
             "p(" + std::to_string(modulus) + "n+" + std::to_string(residue) + ") = 0 mod " +
                 std::to_string(modulus),
             std::nullopt},
            [&cache, partitions_gf, modulus, residue](const auto&, Exponent order) {
                const Exponent base = modulus * (order - 1) + residue + 1;
                return BuiltIdentity{K::congruence, cache.get(partitions_gf, base), LaurentSeries(base),
                                     CongruenceSpec{modulus, residue, Integer(modulus)}};
            });
    }

    add({"EQ1.1a", K::coefficient_identity, "a_3(4n+1) = a_3(n)", std::nullopt},
        [&cache, a3](const auto&, Exponent order) {
            return coefficient_identity(at_order(order, 4 * order, 4, [&](Exponent p) {
                const LaurentSeries s = cache.get(a3, p);
                return Pair{dissect(s, 4, 1), s};
            }));
        });

    add({"EQ1.1b", K::coefficient_identity, "a_5(4n+3) = a_5(2n+1) + 2 a_5(n)", std::nullopt},
        [&cache, a5](const auto&, Exponent order) {
            return coefficient_identity(at_order(order, 4 * order, 4, [&](Exponent p) {
                const LaurentSeries s = cache.get(a5, p);
                return Pair{dissect(s, 4, 3), dissect(s, 2, 1) + Integer(2) * s};
            }));
        });

    add({"EQ1.2", K::coefficient_identity,
         "A_3(2^{2k+1} n + (5*2^{2k}-2)/3) = (2^{2k+1}-1) A_3(2n+1)", ParamSpec{"k", 0, 4}},
        [this, &cache, pairs3](const std::vector<std::int64_t>& params, Exponent order) {
            const auto k = single_param("EQ1.2", params, info("EQ1.2").param.value());
            if (2 * k + 1 > 40) throw InvalidParams("EQ1.2: k too large");
            const std::int64_t step = pow2(2 * k + 1);
            const std::int64_t offset = exact_quotient(Integer(5 * pow2(2 * k) - 2), 3).get_si();
            return coefficient_identity(
                at_order(order, step * order + offset, step, [&](Exponent p) {
                    const LaurentSeries s = cache.get(pairs3, p);
                    return Pair{progression(s, step, offset), Integer(step - 1) * progression(s, 2, 1)};
                }));
        });

    add({"THM1.1", K::series_identity,
         "sum_{n>=-1} A_5(2^k n + 2^{k+1} - 2) q^n = B_k f1^4f5^4/q - 8B_{k-1} f2^4f10^4 + "
         "(8^{k+1}-1)/7 f5^10/f1^2 - (8^{k+1}-8)/7 q^2f10^10/f2^2",
         ParamSpec{"k", 1, 8}},
        [this, &cache, pairs5](const std::vector<std::int64_t>& params, Exponent order) {
            const auto k = single_param("THM1.1", params, info("THM1.1").param.value());
            if (k > 30) throw InvalidParams("THM1.1: k too large");
            Exponent base = order;
            for (std::int64_t i = 0; i < k; ++i) base = 2 * base + 1;
            return series_identity(at_order(order, base, pow2(k), [&](Exponent p) {
                return Pair{a5_dissection_chain(cache.get(pairs5, p), k),
                            a5_dissection_closed_form(k, order)};
            }));
        });

    add({"THM1.2", K::coefficient_identity,
         "A_5(2^{k+1} n + 3*2^k - 2) = B_k A_5(4n+4) + ((8^{k+1}-1)/7 - 9B_k) A_5(2n+1), n >= 0",
         ParamSpec{"k", 1, 8}},
        [this, &cache, pairs5](const std::vector<std::int64_t>& params, Exponent order) {
            const auto k = single_param("THM1.2", params, info("THM1.2").param.value());
            if (k > 30) throw InvalidParams("THM1.2: k too large");
            const std::int64_t step = pow2(k + 1);
            const std::int64_t offset = 3 * pow2(k) - 2;
            const Integer bk = b_value(k);
            const Integer tail = eight_power_term(k + 1) - 9 * bk;
            return coefficient_identity(
                at_order(order, step * order + offset, step, [&](Exponent p) {
                    const LaurentSeries s = cache.get(pairs5, p);
                    return Pair{progression(s, step, offset),
                                bk * progression(s, 4, 4) + tail * progression(s, 2, 1)};
                }));
        });

    add({"EQ1.5", K::congruence,
         "A_5(2^{4m+4} n + 3*2^{4m+3} - 2) = 0 mod (8^{4m+4}-1)/91", ParamSpec{"m", 0, 1}},
        [this, &cache, pairs5](const std::vector<std::int64_t>& params, Exponent order) {
            const auto m = single_param("EQ1.5", params, info("EQ1.5").param.value());
            if (4 * m + 4 > 40) throw InvalidParams("EQ1.5: m too large");
            const std::int64_t step = pow2(4 * m + 4);
            const std::int64_t offset = 3 * pow2(4 * m + 3) - 2;
            const Exponent base = step * (order - 1) + offset + 1;
            return BuiltIdentity{K::congruence, cache.get(pairs5, base), LaurentSeries(base),
                                 CongruenceSpec{step, offset, b_closed_form_4m3(m)}};
        });

    add({"EQ1.5-LIN", K::coefficient_identity,
         "A_5(2^{4m+4} n + 3*2^{4m+3} - 2) = (8^{4m+4}-1)/91 (A_5(4n+4) + 4 A_5(2n+1))",
         ParamSpec{"m", 0, 1}},
        [this, &cache, pairs5](const std::vector<std::int64_t>& params, Exponent order) {
            const auto m = single_param("EQ1.5-LIN", params, info("EQ1.5-LIN").param.value());
            if (4 * m + 4 > 40) throw InvalidParams("EQ1.5-LIN: m too large");
            const std::int64_t step = pow2(4 * m + 4);
            const std::int64_t offset = 3 * pow2(4 * m + 3) - 2;
            const Integer d = b_closed_form_4m3(m);
            return coefficient_identity(
                at_order(order, step * order + offset, step, [&](Exponent p) {
                    const LaurentSeries s = cache.get(pairs5, p);
                    return Pair{progression(s, step, offset),
                                d * (progression(s, 4, 4) + Integer(4) * progression(s, 2, 1))};
                }));
        });

    add({"EQ2.1", K::series_identity, "f1^4 = f4^10/(f2^2 f8^4) - 4q f2^2 f8^4/f4^2", std::nullopt},
        [](const auto&, Exponent order) {
            return series_identity(at_order(order, order, 1, [](Exponent p) {
                return Pair{eta("f1^4", p),
                            eta("f4^10/f2^2/f8^4", p) - Integer(4) * eta("q*f2^2*f8^4/f4^2", p)};
            }));
        });

    add({"EQ2.2", K::series_identity,
         "f5/f1 = f8 f20^2/(f2^2 f40) + q f4^3 f10 f40/(f2^3 f8 f20)", std::nullopt},
        [](const auto&, Exponent order) {
            return series_identity(at_order(order, order, 1, [](Exponent p) {
                return Pair{eta("f5/f1", p),
                            eta("f8*f20^2/f2^2/f40", p) + eta("q*f4^3*f10*f40/f2^3/f8/f20", p)};
            }));
        });

    struct KEntry {
        const char* name;
        const char* statement;
        const char* quotient;
        int middle;
    };
    for (const auto& e : {KEntry{"EQ2.3", "f2 f5^5/(q f1 f10^5) = 1/k - k", "f2*f5^5/q/f1/f10^5", 0},
                          KEntry{"EQ2.4", "f2^4 f5^2/(q f1^2 f10^4) = 1/k + 1 - k",
                                 "f2^4*f5^2/q/f1^2/f10^4", 1},
                          KEntry{"EQ2.5", "f1^3 f5/(q f2 f10^3) = 1/k - 4 - k", "f1^3*f5/q/f2/f10^3", -4}}) {
        add({e.name, K::series_identity, e.statement, std::nullopt}, [e](const auto&, Exponent order) {
            return series_identity(at_order(order, std::max<Exponent>(order, 2), 1, [&](Exponent p) {
                const LaurentSeries x = k_series(p);
                return Pair{eta(e.quotient, p), invert(x) + constant(e.middle, p) - x};
            }));
        });
    }

    add({"LEM2.3", K::series_identity, "X^2 - Y + 2XY + X^2 Y + Y^2 = 0, X = k(q), Y = k(q^2)",
         std::nullopt},
        [](const auto&, Exponent order) {
            return relation(order, [](Exponent p) {
                const LaurentSeries x = k_series(p);
                const LaurentSeries y = substitute_power(x, 2);
                const LaurentSeries x2 = x * x;
                return x2 - y + Integer(2) * (x * y) + x2 * y + y * y;
            });
        });

    add({"LEM2.4", K::series_identity,
         "f2^3 f10^9/(f1^3 f4 f5 f20^3) - 4q^2 f4 f5^2 f20^3/f1^2 = f5^5/f1 + 2q f10^5/f2", std::nullopt},
        [](const auto&, Exponent order) {
            return series_identity(at_order(order, order, 1, [](Exponent p) {
                return Pair{eta("f2^3*f10^9/f1^3/f4/f5/f20^3", p) -
                                Integer(4) * eta("q^2*f4*f5^2*f20^3/f1^2", p),
                            eta("f5^5/f1", p) + Integer(2) * eta("q*f10^5/f2", p)};
            }));
        });

    add({"LEM2.5", K::series_identity,
         "f4 f10^12/(f1^2 f5^2 f20^5) + 4q^3 f2^3 f5^3 f20^5/(f1^3 f4 f10^3) = "
         "f2^3 f5^8/(f1^4 f10^3) - 2q f2^2 f5^3 f10^2/f1^3",
         std::nullopt},
        [](const auto&, Exponent order) {
            return series_identity(at_order(order, order, 1, [](Exponent p) {
                return Pair{eta("f4*f10^12/f1^2/f5^2/f20^5", p) +
                                Integer(4) * eta("q^3*f2^3*f5^3*f20^5/f1^3/f4/f10^3", p),
                            eta("f2^3*f5^8/f1^4/f10^3", p) -
                                Integer(2) * eta("q*f2^2*f5^3*f10^2/f1^3", p)};
            }));
        });

    add({"EQ2.6", K::series_identity,
         "f1 f4 f10^10/(q f2^2 f5^5 f20^5) + 4q^2 f2 f20^5/(f4 f10^5) = f2 f5^5/(q f1 f10^5) - 2",
         std::nullopt},
        [](const auto&, Exponent order) {
            return series_identity(at_order(order, order, 1, [](Exponent p) {
                return Pair{eta("f1*f4*f10^10/q/f2^2/f5^5/f20^5", p) +
                                Integer(4) * eta("q^2*f2*f20^5/f4/f10^5", p),
                            eta("f2*f5^5/q/f1/f10^5", p) - constant(2, p)};
            }));
        });

    add({"EQ2.9", K::series_identity,
         "X^2 Z^2 - (1 - 2X - X^2)(1 - X^2) Z + 4X(1 - X^2) = 0, X = k(q), Z = f4 f10^5/(q^2 f2 f20^5)",
         std::nullopt},
        [](const auto&, Exponent order) {
            return relation(order, [](Exponent p) {
                const LaurentSeries x = k_series(p);
                const LaurentSeries z = eta("f4*f10^5/q^2/f2/f20^5", p);
                const LaurentSeries x2 = x * x;
                const LaurentSeries one_minus_x2 = one(p) - x2;
                return x2 * (z * z) - (one(p) - Integer(2) * x - x2) * one_minus_x2 * z +
                       Integer(4) * x * one_minus_x2;
            });
        });

    add({"LEM2.6", K::series_identity,
         "f1^2 f4^2 f10^2/(q f2^2 f5^2 f20^2) - f2^4 f20^2/(f4^2 f10^4) = f1^3 f5/(q f2 f10^3)",
         std::nullopt},
        [](const auto&, Exponent order) {
            return series_identity(at_order(order, order, 1, [](Exponent p) {
                return Pair{eta("f1^2*f4^2*f10^2/q/f2^2/f5^2/f20^2", p) - eta("f2^4*f20^2/f4^2/f10^4", p),
                            eta("f1^3*f5/q/f2/f10^3", p)};
            }));
        });

    add({"EQ2.13", K::series_identity,
         "A^2 + 4AB + B^2 - 5A - AB^2 = 0, A = f1^4 f10^2/(f2^2 f5^4), B = A(q^2)", std::nullopt},
        [](const auto&, Exponent order) {
            return relation(order, [](Exponent p) {
                const LaurentSeries a = eta("f1^4*f10^2/f2^2/f5^4", p);
                const LaurentSeries b = truncate(substitute_power(a, 2), p);
                return a * a + Integer(4) * (a * b) + b * b - Integer(5) * a - a * (b * b);
            });
        });

    add({"LEM2.7", K::series_identity,
         "(f4 f10^12/(f1^2 f5^2 f20^5) - 4q^3 f2^3 f5^3 f20^5/(f1^3 f4 f10^3))^2 = "
         "f2^4 f5^12/(f1^4 f10^4) + 4q^2 f2^2 f5^2 f10^6/f1^2",
         std::nullopt},
        [](const auto&, Exponent order) {
            return series_identity(at_order(order, order, 1, [](Exponent p) {
                const LaurentSeries s = eta("f4*f10^12/f1^2/f5^2/f20^5", p) -
                                        Integer(4) * eta("q^3*f2^3*f5^3*f20^5/f1^3/f4/f10^3", p);
                return Pair{s * s, eta("f2^4*f5^12/f1^4/f10^4", p) +
                                       Integer(4) * eta("q^2*f2^2*f5^2*f10^6/f1^2", p)};
            }));
        });

    add({"LEM2.8", K::series_identity,
         "-q (f5^5/f1 + 2q f10^5/f2)^2 + f1^4 f5^4 + 9q f5^10/f1^2 - 8q^3 f10^10/f2^2 = "
         "f2^4 f5^12/(f1^4 f10^4) + 4q^2 f2^2 f5^2 f10^6/f1^2",
         std::nullopt},
        [](const auto&, Exponent order) {
            return series_identity(at_order(order, order, 1, [](Exponent p) {
                const LaurentSeries t = eta("f5^5/f1", p) + Integer(2) * eta("q*f10^5/f2", p);
                const LaurentSeries lhs = -shift(t * t, 1) + eta("f1^4*f5^4", p) +
                                          Integer(9) * eta("q*f5^10/f1^2", p) -
                                          Integer(8) * eta("q^3*f10^10/f2^2", p);
                return Pair{lhs, eta("f2^4*f5^12/f1^4/f10^4", p) +
                                     Integer(4) * eta("q^2*f2^2*f5^2*f10^6/f1^2", p)};
            }));
        });

    add({"EQ2.16", K::series_identity,
         "f1^9 f5^3/(q^3 f2^3 f10^9) + 8 f1^3 f5^9/(q^2 f2^3 f10^9) - 4 f1^4 f5^4/(q f2^4 f10^4) - "
         "12 f1^5 f10/(f2^5 f5) = f1 f2 f5^11/(q^3 f10^13) + 4 f1^3 f5/(q f2 f10^3)",
         std::nullopt},
        [](const auto&, Exponent order) {
            return series_identity(at_order(order, order, 1, [](Exponent p) {
                const LaurentSeries lhs = eta("f1^9*f5^3/q^3/f2^3/f10^9", p) +
                                          Integer(8) * eta("f1^3*f5^9/q^2/f2^3/f10^9", p) -
                                          Integer(4) * eta("f1^4*f5^4/q/f2^4/f10^4", p) -
                                          Integer(12) * eta("f1^5*f10/f2^5/f5", p);
                return Pair{lhs, eta("f1*f2*f5^11/q^3/f10^13", p) +
                                     Integer(4) * eta("f1^3*f5/q/f2/f10^3", p)};
            }));
        });

    add({"PROP3.1", K::series_identity,
         "sum A_5(2n) q^n = f1^4 f5^4 + 9q f5^10/f1^2 - 8q^3 f10^10/f2^2", std::nullopt},
        [&cache, pairs5](const auto&, Exponent order) {
            return series_identity(at_order(order, 2 * order, 2, [&](Exponent p) {
                return Pair{dissect(cache.get(pairs5, p), 2, 0),
                            eta("f1^4*f5^4", order) + Integer(9) * eta("q*f5^10/f1^2", order) -
                                Integer(8) * eta("q^3*f10^10/f2^2", order)};
            }));
        });

    add({"PROP3.2", K::series_identity,
         "sum_{n>=-1} c(2n+3) q^n = -4 f1^4 f5^4/q - 8 f2^4 f10^4, where q^-3 f1^4 f5^4 = sum c(n+3) q^n",
         std::nullopt},
        [](const auto&, Exponent order) {
            return series_identity(at_order(order, 2 * order, 2, [&](Exponent p) {
                return Pair{dissect(eta("f1^4*f5^4/q^3", p), 2, 0),
                            Integer(-4) * eta("f1^4*f5^4/q", order) - Integer(8) * eta("f2^4*f10^4", order)};
            }));
        });

    add({"EQ3.5", K::series_identity,
         "sum_{n>=-1} A_5(2n+2) q^n = f1^4 f5^4/q + 9 f5^10/f1^2 - 8q^2 f10^10/f2^2", std::nullopt},
        [&cache, pairs5](const auto&, Exponent order) {
            return series_identity(at_order(order, 2 * order + 1, 2, [&](Exponent p) {
                return Pair{dissect(shift(cache.get(pairs5, p), -2), 2, 0),
                            eta("f1^4*f5^4/q", order) + Integer(9) * eta("f5^10/f1^2", order) -
                                Integer(8) * eta("q^2*f10^10/f2^2", order)};
            }));
        });

    add({"LEM4.1", K::integer_identity, "B_{4m+3} = (8^{4m+4}-1)/91", ParamSpec{"m", 0, 8}},
        [this](const std::vector<std::int64_t>& params, Exponent order) {
            const auto m = single_param("LEM4.1", params, info("LEM4.1").param.value());
            return integer_identity(b_value(4 * m + 3), b_closed_form_4m3(m), order);
        });

    add({"EQ4.1", K::integer_identity, "B_{4m+7} + 64 B_{4m+3} = 5 (8^{4m+6}-1)/7", ParamSpec{"m", 0, 6}},
        [this](const std::vector<std::int64_t>& params, Exponent order) {
            const auto m = single_param("EQ4.1", params, info("EQ4.1").param.value());
            return integer_identity(b_value(4 * m + 7) + 64 * b_value(4 * m + 3),
                                    5 * eight_power_term(4 * m + 6), order);
        });
}

} // namespace qseries
