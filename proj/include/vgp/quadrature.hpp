#pragma once

#include <array>
#include <functional>
#include <vector>

namespace vgp {

enum class Exec { serial, parallel };

struct NewtonCotesRule {
    static constexpr int Q = 12;
    std::array<double, Q + 1> weights{};
    long panels = 5000;
    double a = 0.0;
    double b = 20.0;

    double step() const { return (b - a) / (static_cast<double>(panels) * Q); }
    std::size_t nodes() const { return static_cast<std::size_t>(panels) * Q + 1; }
    double node(std::size_t i) const { return a + static_cast<double>(i) * step(); }
};

// Closed 13-point weights from exact rational integration of the Lagrange basis on [0, 12].
const std::array<double, NewtonCotesRule::Q + 1>& newton_cotes_12_weights();

NewtonCotesRule make_rule(double a, double b, long panels);

// Fixed-shape pairwise reduction; the result depends only on the values and their order.
double pairwise_sum(const double* v, std::size_t n);

// h sum_p sum_j W_j f(x_{Qp+j}). Serial and parallel variants give bit-identical results.
double composite_integrate(const std::function<double(double)>& f, const NewtonCotesRule& rule,
                           Exec exec = Exec::parallel);

// Same rule applied to precomputed node samples (length rule.nodes()).
double composite_sum(const std::vector<double>& samples, const NewtonCotesRule& rule);

} // namespace vgp
