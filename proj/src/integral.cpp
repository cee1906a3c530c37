#include "cantor/integral.hpp"

#include <cmath>
#include <map>
#include <vector>

#include "cantor/errors.hpp"

namespace cantor {

namespace {

/**
 * Every argument reached by the recursion is l * prod_j w_j^{n_j} over the
 * distinct weight values w_j, so the exponent vector n identifies it exactly
 * and serves as the memo key.
 */
class ArgumentLattice {
public:
    explicit ArgumentLattice(const Ladder& ladder) {
        const auto& w = ladder.weights();
        group_.resize(w.size());
        for (std::size_t k = 0; k < w.size(); ++k) {
            std::size_t j = 0;
            while (j < distinct_.size() && distinct_[j] != w[k]) ++j;
            if (j == distinct_.size()) distinct_.push_back(w[k]);
            group_[k] = j;
        }
    }

    using Key = std::vector<int>;

    Key root() const { return Key(distinct_.size(), 0); }

    Key child(const Key& key, std::size_t step) const {
        Key next = key;
        ++next[group_[step]];
        return next;
    }

    double scale(const Key& key) const {
        double s = 1.0;
        for (std::size_t j = 0; j < key.size(); ++j) s *= std::pow(distinct_[j], key[j]);
        return s;
    }

    IntervalValue scale_enclosure(const Key& key) const {
        IntervalValue s(1.0);
        for (std::size_t j = 0; j < key.size(); ++j)
            for (int i = 0; i < key[j]; ++i) s = distinct_[j] * s;
        return s;
    }

    static int level(const Key& key) {
        int total = 0;
        for (int n : key) total += n;
        return total;
    }

private:
    std::vector<double> distinct_;
    std::vector<std::size_t> group_;
};

void check_argument(double lambda, const char* who) {
    if (!std::isfinite(lambda)) throw DomainError(std::string(who) + ": argument is not finite");
    if (lambda < 0.0) throw DomainError(std::string(who) + ": argument must be non-negative");
}

class ScaledEvaluator {
public:
    ScaledEvaluator(const Ladder& ladder, double lambda, const EvalConfig& cfg)
        : ladder_(ladder), lattice_(ladder), lambda_(lambda), cfg_(cfg),
          moments_(moments(ladder, cfg.taylor_order)) {}

    double run() { return eval(lattice_.root()); }

private:
    double taylor(double mu) const {
        // exp(-mu) * sum_j M_j mu^j / j!, Horner from the top
        double sum = 0.0;
        for (std::size_t j = moments_.size(); j-- > 0;) {
            sum = moments_[j] + sum * mu / static_cast<double>(j + 1);
        }
        return std::exp(-mu) * sum;
    }

    double eval(const ArgumentLattice::Key& key) {
        const double mu = lambda_ * lattice_.scale(key);
        if (mu < cfg_.base_threshold) return taylor(mu);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;

        const std::size_t m = ladder_.steps();
        double sum = 0.0;
        for (std::size_t k = 0; k < m; ++k) {
            const double decay = std::exp(-ladder_.g(k + 1) * mu);
            if (decay > 0.0) sum += ladder_.step_width(k) * decay * eval(lattice_.child(key, k));
            if (k + 1 < m) sum += ladder_.gap_width(k) * decay;
        }
        memo_.emplace(key, sum);
        return sum;
    }

    const Ladder& ladder_;
    ArgumentLattice lattice_;
    double lambda_;
    const EvalConfig& cfg_;
    std::vector<double> moments_;
    std::map<ArgumentLattice::Key, double> memo_;
};

class Encloser {
public:
    Encloser(const Ladder& ladder, double lambda, int depth)
        : ladder_(ladder), lattice_(ladder), lambda_(lambda), depth_(depth) {}

    IntervalValue run() { return eval(lattice_.root()); }

private:
    IntervalValue eval(const ArgumentLattice::Key& key) {
        const IntervalValue mu = IntervalValue(lambda_) * lattice_.scale_enclosure(key);
        if (mu.hi() == 0.0) return IntervalValue(1.0);
        if (ArgumentLattice::level(key) >= depth_) {
            // 0 <= C <= 1 gives exp(-mu) <= e(mu) <= 1
            return IntervalValue(exp(IntervalValue(-mu.hi())).lo(), 1.0);
        }
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;

        const std::size_t m = ladder_.steps();
        IntervalValue sum(0.0);
        for (std::size_t k = 0; k < m; ++k) {
            const IntervalValue decay = exp(IntervalValue(-ladder_.g(k + 1)) * mu);
            sum += IntervalValue(ladder_.step_width(k)) * decay * eval(lattice_.child(key, k));
            if (k + 1 < m) sum += IntervalValue(ladder_.gap_width(k)) * decay;
        }
        const IntervalValue clipped(std::max(sum.lo(), 0.0), std::min(sum.hi(), 1.0));
        memo_.emplace(key, clipped);
        return clipped;
    }

    const Ladder& ladder_;
    ArgumentLattice lattice_;
    double lambda_;
    int depth_;
    std::map<ArgumentLattice::Key, IntervalValue> memo_;
};

}  // namespace

void EvalConfig::validate() const {
    if (!(base_threshold > 0.0)) throw DomainError("EvalConfig: base_threshold must be positive");
    if (taylor_order < 0) throw DomainError("EvalConfig: taylor_order must be non-negative");
    if (enclosure_depth < 0) throw DomainError("EvalConfig: enclosure_depth must be non-negative");
    if (!(rel_tol > 0.0)) throw DomainError("EvalConfig: rel_tol must be positive");
    // 0 <= C <= 1 bounds the Taylor remainder by l0^{J+1} e^{l0} / (J+1)!
    const double n = static_cast<double>(taylor_order) + 1.0;
    const double log_tail = n * std::log(base_threshold) + base_threshold - std::lgamma(n + 1.0);
    if (log_tail >= std::log(rel_tol))
        throw DomainError("EvalConfig: taylor_order too small for base_threshold and rel_tol");
}

double eval_scaled_E(const Ladder& ladder, double lambda, const EvalConfig& cfg) {
    check_argument(lambda, "eval_scaled_E");
    cfg.validate();
    if (lambda == 0.0) return 1.0;
    if (ladder.steps() == 1) return -std::expm1(-lambda) / lambda;  // C(t) = t
    return ScaledEvaluator(ladder, lambda, cfg).run();
}

IntervalValue enclose_E(const Ladder& ladder, double lambda, int depth) {
    check_argument(lambda, "enclose_E");
    if (depth < 0) throw DomainError("enclose_E: depth must be non-negative");
    if (lambda == 0.0) return IntervalValue(1.0);
    return Encloser(ladder, lambda, depth).run();
}

double eval_E_negative(const Ladder& ladder, double lambda, const EvalConfig& cfg) {
    check_argument(lambda, "eval_E_negative");
    // E_C(-l) = exp(-l) E_{C1}(l) = e_{C1}(l)
    return eval_scaled_E(mirror(ladder), lambda, cfg);
}

}  // namespace cantor
