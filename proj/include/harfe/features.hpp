#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "harfe/errors.hpp"

namespace harfe {

using Index = Eigen::Index;

enum class Activation { Sin, ComplexExp, ReLU, Sigmoid };

// ComplexExp produces a complex feature matrix; everything else is real.
inline bool activation_is_complex(Activation a) { return a == Activation::ComplexExp; }

std::string to_string(Activation a);
Activation activation_from_string(const std::string& s);

struct GaussianIID {
    double sigma = 1.0;
};
struct UniformIID {
    double a = -1.0;
    double b = 1.0;
};
using WeightDistribution = std::variant<GaussianIID, UniformIID>;

struct BiasNone {};
struct BiasUniform {
    double a = 0.0;
    double b = 2.0 * 3.14159265358979323846;
};
using BiasDistribution = std::variant<BiasNone, BiasUniform>;

// The frozen random hidden layer: a d x N weight matrix with exactly q
// nonzeros per column, stored column-sparse, plus per-feature biases.
// Immutable after construction; reconstruction from (seed, d, N, q,
// distribution, activation, bias) is bit-identical.
struct FeatureMap {
    struct Column {
        std::vector<std::uint32_t> indices;  // sorted, distinct, in [0, d)
        std::vector<double> values;
    };

    Index d = 0;
    Index N = 0;
    Index q = 0;
    Activation activation = Activation::Sin;
    WeightDistribution distribution = GaussianIID{};
    BiasDistribution bias_distribution = BiasNone{};
    std::uint64_t seed = 0;
    Eigen::VectorXd biases;        // length N (zeros when bias is none)
    std::vector<Column> columns;   // length N

    // Dense d x N export of the weights, for diagnostics.
    Eigen::MatrixXd dense_weights() const;
};

// Feature matrix A with a_{k,j} = phi(<x_k, w_j> + b_j); m rows (samples),
// N columns (features). Real or complex depending on the activation.
struct FeatureMatrix {
    std::variant<Eigen::MatrixXd, Eigen::MatrixXcd> entries;

    bool is_complex() const { return entries.index() == 1; }
    Index rows() const;
    Index cols() const;
    const Eigen::MatrixXd& real() const;
    const Eigen::MatrixXcd& cplx() const;
};

// Draws the random layer: per column, q distinct dimensions uniformly at
// random, nonzero values i.i.d. from `dist`, bias from `bias_dist`. Column j
// consumes only its own substream of `seed`, so growing N leaves earlier
// columns untouched.
FeatureMap sample_feature_map(Index d, Index N, Index q, const WeightDistribution& dist,
                              const BiasDistribution& bias_dist, Activation activation,
                              std::uint64_t seed);

// Evaluates A over X (d x m, one sample per column) exploiting column
// sparsity; O(q) per entry.
FeatureMatrix evaluate_features(const FeatureMap& map, const Eigen::MatrixXd& X);

// Same, restricted to the given feature columns; result has
// columns.size() columns in the given order.
FeatureMatrix evaluate_features(const FeatureMap& map, const Eigen::MatrixXd& X,
                                std::span<const Index> columns);

// JSON round trip; floating point survives bit-exactly.
std::string feature_map_to_json(const FeatureMap& map);
FeatureMap feature_map_from_json(const std::string& json_text);

inline constexpr int kFeatureMapSchemaVersion = 1;

}  // namespace harfe
