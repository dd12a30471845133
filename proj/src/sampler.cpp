#include "protogame/sampler.hpp"

#include <optional>
#include <set>

#include "protogame/errors.hpp"

namespace protogame {

uint64_t SplitMix64::next() {
    state_ += 0x9e3779b97f4a7c15ull;
    uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

long long SplitMix64::next_in(long long lo, long long hi) {
    uint64_t range = static_cast<uint64_t>(hi - lo) + 1;
    return lo + static_cast<long long>(next() % range);
}

namespace {

bool refers_to(const Expr &e, const std::string &name) {
    switch (e.kind()) {
        case Expr::Kind::literal: return false;
        case Expr::Kind::param: return e.param_name() == name;
        case Expr::Kind::negate: return refers_to(e.left(), name);
        default: return refers_to(e.left(), name) || refers_to(e.right(), name);
    }
}

bool evaluable_under(const Expr &e, const ParamSet &chosen) {
    switch (e.kind()) {
        case Expr::Kind::literal: return true;
        case Expr::Kind::param: return chosen.count(e.param_name()) > 0;
        case Expr::Kind::negate: return evaluable_under(e.left(), chosen);
        default: return evaluable_under(e.left(), chosen) && evaluable_under(e.right(), chosen);
    }
}

struct Interval {
    std::optional<Rational> lower;  // strictness not tracked: we sample interiors
    std::optional<Rational> upper;
    std::optional<Rational> pin;
};

// Collect bounds for `name` from constraints whose other side is already
// determined. A constraint is usable when `name` stands alone on one side
// and does not occur on the other.
bool collect_interval(const std::string &name, const std::vector<Constraint> &constraints,
                      const ParamSet &chosen, Interval &out) {
    for (const auto &c : constraints) {
        bool left_is_var = c.left.kind() == Expr::Kind::param && c.left.param_name() == name;
        bool right_is_var = c.right.kind() == Expr::Kind::param && c.right.param_name() == name;
        if (left_is_var && !refers_to(c.right, name) && evaluable_under(c.right, chosen)) {
            Rational bound = c.right.eval(chosen);
            if (c.relation == Relation::equal) {
                if (out.pin && *out.pin != bound) return false;
                out.pin = bound;
            } else if (!out.upper || bound < *out.upper) {
                out.upper = bound;
            }
        } else if (right_is_var && !refers_to(c.left, name) && evaluable_under(c.left, chosen)) {
            Rational bound = c.left.eval(chosen);
            if (c.relation == Relation::equal) {
                if (out.pin && *out.pin != bound) return false;
                out.pin = bound;
            } else if (!out.lower || bound > *out.lower) {
                out.lower = bound;
            }
        }
    }
    return true;
}

} // namespace

std::vector<ParamSet> sample_params(const std::vector<Constraint> &constraints,
                                    const std::vector<Param> &decls, long long seed, long long n,
                                    const SamplerBounds &bounds) {
    if (n < 1) throw UsageError("sample count must be >= 1");
    std::vector<ParamSet> samples;
    samples.reserve(static_cast<size_t>(n));

    const long long den = bounds.jitter_denominator;
    for (long long index = 0; index < n; ++index) {
        SplitMix64 rng(static_cast<uint64_t>(seed + index));
        long long draws = 0;
        std::optional<ParamSet> found;

        // interval construction, declaration order
        constexpr int kConstructiveAttempts = 64;
        for (int attempt = 0; attempt < kConstructiveAttempts && draws < bounds.budget; ++attempt) {
            ++draws;
            ParamSet chosen;
            bool ok = true;
            for (const auto &decl : decls) {
                Interval iv;
                if (!collect_interval(decl.name, constraints, chosen, iv)) {
                    ok = false;
                    break;
                }
                Rational value;
                if (iv.pin) {
                    value = *iv.pin;
                } else if (iv.lower && iv.upper) {
                    if (!(*iv.lower < *iv.upper)) {
                        ok = false;
                        break;
                    }
                    Rational r(rng.next_in(1, den - 1), den);
                    value = *iv.lower + (*iv.upper - *iv.lower) * r;
                } else if (iv.lower) {
                    Rational r(rng.next_in(1, den), den);
                    value = *iv.lower + Rational(bounds.span) * r;
                } else if (iv.upper) {
                    Rational r(rng.next_in(1, den), den);
                    value = *iv.upper - Rational(bounds.span) * r;
                } else {
                    Rational r(rng.next_in(0, 2 * den), den);
                    value = Rational(-bounds.span) + Rational(bounds.span) * r;
                }
                chosen.emplace(decl.name, std::move(value));
            }
            if (ok && check_constraints(chosen, constraints).all_satisfied) {
                found = std::move(chosen);
                break;
            }
        }

        // rejection fallback in a fixed box
        while (!found && draws < bounds.budget) {
            ++draws;
            ParamSet chosen;
            for (const auto &decl : decls) {
                Rational r(rng.next_in(0, 2 * den), den);
                chosen.emplace(decl.name, Rational(-bounds.box) + Rational(bounds.box) * r);
            }
            if (check_constraints(chosen, constraints).all_satisfied) found = std::move(chosen);
        }

        if (!found)
            throw SamplerBudgetError("no satisfying parameters within " +
                                     std::to_string(bounds.budget) + " draws (sample " +
                                     std::to_string(index) + ", seed " + std::to_string(seed) + ")");
        samples.push_back(std::move(*found));
    }
    return samples;
}

} // namespace protogame
