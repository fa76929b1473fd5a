#include "harfe/features.hpp"

#include <cmath>
#include <nlohmann/json.hpp>

#include "harfe/rng.hpp"

using nlohmann::json;

namespace harfe {

std::string to_string(Activation a) {
    switch (a) {
        case Activation::Sin: return "sin";
        case Activation::ComplexExp: return "complex_exp";
        case Activation::ReLU: return "relu";
        case Activation::Sigmoid: return "sigmoid";
    }
    return "sin";
}

Activation activation_from_string(const std::string& s) {
    if (s == "sin") return Activation::Sin;
    if (s == "complex_exp") return Activation::ComplexExp;
    if (s == "relu") return Activation::ReLU;
    if (s == "sigmoid") return Activation::Sigmoid;
    throw SchemaError("unknown activation '" + s + "'");
}

Eigen::MatrixXd FeatureMap::dense_weights() const {
    Eigen::MatrixXd W = Eigen::MatrixXd::Zero(d, N);
    for (Index j = 0; j < N; ++j) {
        const Column& col = columns[static_cast<std::size_t>(j)];
        for (std::size_t t = 0; t < col.indices.size(); ++t)
            W(col.indices[t], j) = col.values[t];
    }
    return W;
}

Index FeatureMatrix::rows() const {
    return std::visit([](const auto& m) { return m.rows(); }, entries);
}

Index FeatureMatrix::cols() const {
    return std::visit([](const auto& m) { return m.cols(); }, entries);
}

const Eigen::MatrixXd& FeatureMatrix::real() const {
    if (is_complex()) throw ShapeError("feature matrix is complex, real() unavailable");
    return std::get<Eigen::MatrixXd>(entries);
}

const Eigen::MatrixXcd& FeatureMatrix::cplx() const {
    if (!is_complex()) throw ShapeError("feature matrix is real, cplx() unavailable");
    return std::get<Eigen::MatrixXcd>(entries);
}

FeatureMap sample_feature_map(Index d, Index N, Index q, const WeightDistribution& dist,
                              const BiasDistribution& bias_dist, Activation activation,
                              std::uint64_t seed) {
    if (d < 1) throw InvalidSizeError("input dimension d must be >= 1");
    if (N < 1) throw InvalidSizeError("feature count N must be >= 1");
    if (q < 1 || q > d) throw InvalidOrderError("weight sparsity q must satisfy 1 <= q <= d");

    FeatureMap map;
    map.d = d;
    map.N = N;
    map.q = q;
    map.activation = activation;
    map.distribution = dist;
    map.bias_distribution = bias_dist;
    map.seed = seed;
    map.biases = Eigen::VectorXd::Zero(N);
    map.columns.resize(static_cast<std::size_t>(N));

    const auto draw_value = [&dist](SplitMix64& g) {
        if (const auto* gauss = std::get_if<GaussianIID>(&dist))
            return gauss->sigma * g.next_normal();
        const auto& uni = std::get<UniformIID>(dist);
        return g.next_uniform(uni.a, uni.b);
    };

    for (Index j = 0; j < N; ++j) {
        SplitMix64 g(rng::substream(seed, rng::Stream::ColumnWeights, static_cast<std::uint64_t>(j)));
        FeatureMap::Column& col = map.columns[static_cast<std::size_t>(j)];
        col.indices = g.next_subset(static_cast<std::uint32_t>(d), static_cast<std::uint32_t>(q));
        col.values.resize(static_cast<std::size_t>(q));
        for (Index t = 0; t < q; ++t) col.values[static_cast<std::size_t>(t)] = draw_value(g);

        if (const auto* uni = std::get_if<BiasUniform>(&bias_dist)) {
            SplitMix64 gb(rng::substream(seed, rng::Stream::ColumnBias, static_cast<std::uint64_t>(j)));
            map.biases[j] = gb.next_uniform(uni->a, uni->b);
        }
    }
    return map;
}

namespace {

// z_{k,j} = <x_k, w_j> + b_j for the requested columns, sparse inner product.
Eigen::MatrixXd preactivations(const FeatureMap& map, const Eigen::MatrixXd& X,
                               std::span<const Index> cols) {
    const Index m = X.cols();
    Eigen::MatrixXd Z(m, static_cast<Index>(cols.size()));
    for (std::size_t c = 0; c < cols.size(); ++c) {
        const Index j = cols[c];
        if (j < 0 || j >= map.N) throw ShapeError("feature column index out of range");
        const FeatureMap::Column& col = map.columns[static_cast<std::size_t>(j)];
        const double b = map.biases[j];
        for (Index k = 0; k < m; ++k) {
            double z = b;
            for (std::size_t t = 0; t < col.indices.size(); ++t)
                z += col.values[t] * X(col.indices[t], k);
            Z(k, static_cast<Index>(c)) = z;
        }
    }
    return Z;
}

FeatureMatrix activate(const FeatureMap& map, Eigen::MatrixXd Z) {
    switch (map.activation) {
        case Activation::Sin:
            return {Eigen::MatrixXd(Z.array().sin())};
        case Activation::ReLU:
            return {Eigen::MatrixXd(Z.array().max(0.0))};
        case Activation::Sigmoid:
            return {Eigen::MatrixXd((1.0 / (1.0 + (-Z.array()).exp())))};
        case Activation::ComplexExp: {
            Eigen::MatrixXcd A(Z.rows(), Z.cols());
            A.real() = Z.array().cos();
            A.imag() = Z.array().sin();
            return {std::move(A)};
        }
    }
    throw Error("unreachable activation");
}

}  // namespace

FeatureMatrix evaluate_features(const FeatureMap& map, const Eigen::MatrixXd& X) {
    std::vector<Index> all(static_cast<std::size_t>(map.N));
    for (Index j = 0; j < map.N; ++j) all[static_cast<std::size_t>(j)] = j;
    return evaluate_features(map, X, all);
}

FeatureMatrix evaluate_features(const FeatureMap& map, const Eigen::MatrixXd& X,
                                std::span<const Index> columns) {
    if (X.rows() != map.d)
        throw ShapeError("X has " + std::to_string(X.rows()) + " rows, feature map expects " +
                         std::to_string(map.d));
    return activate(map, preactivations(map, X, columns));
}

std::string feature_map_to_json(const FeatureMap& map) {
    json doc;
    doc["schema_version"] = kFeatureMapSchemaVersion;
    doc["d"] = map.d;
    doc["N"] = map.N;
    doc["q"] = map.q;
    doc["activation"] = to_string(map.activation);
    if (const auto* gauss = std::get_if<GaussianIID>(&map.distribution))
        doc["distribution"] = {{"type", "gaussian"}, {"sigma", gauss->sigma}};
    else {
        const auto& uni = std::get<UniformIID>(map.distribution);
        doc["distribution"] = {{"type", "uniform"}, {"a", uni.a}, {"b", uni.b}};
    }
    if (std::holds_alternative<BiasNone>(map.bias_distribution))
        doc["bias"] = {{"type", "none"}};
    else {
        const auto& uni = std::get<BiasUniform>(map.bias_distribution);
        doc["bias"] = {{"type", "uniform"}, {"a", uni.a}, {"b", uni.b}};
    }
    doc["seed"] = map.seed;
    doc["biases"] = std::vector<double>(map.biases.data(), map.biases.data() + map.biases.size());
    json cols = json::array();
    for (const auto& col : map.columns)
        cols.push_back({{"indices", col.indices}, {"values", col.values}});
    doc["columns"] = std::move(cols);
    return doc.dump();
}

FeatureMap feature_map_from_json(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("feature map JSON: ") + e.what());
    }
    if (!doc.contains("schema_version") || !doc["schema_version"].is_number_integer())
        throw ParseError("feature map JSON: missing schema_version");
    if (doc["schema_version"].get<int>() != kFeatureMapSchemaVersion)
        throw VersionError("feature map schema_version " + doc["schema_version"].dump() +
                           " unsupported (expected " + std::to_string(kFeatureMapSchemaVersion) + ")");

    FeatureMap map;
    try {
        map.d = doc.at("d").get<Index>();
        map.N = doc.at("N").get<Index>();
        map.q = doc.at("q").get<Index>();
        map.activation = activation_from_string(doc.at("activation").get<std::string>());
        const json& dist = doc.at("distribution");
        const std::string type = dist.at("type").get<std::string>();
        if (type == "gaussian")
            map.distribution = GaussianIID{dist.at("sigma").get<double>()};
        else if (type == "uniform")
            map.distribution = UniformIID{dist.at("a").get<double>(), dist.at("b").get<double>()};
        else
            throw ParseError("unknown weight distribution '" + type + "'");
        const json& bias = doc.at("bias");
        const std::string btype = bias.at("type").get<std::string>();
        if (btype == "none")
            map.bias_distribution = BiasNone{};
        else if (btype == "uniform")
            map.bias_distribution = BiasUniform{bias.at("a").get<double>(), bias.at("b").get<double>()};
        else
            throw ParseError("unknown bias distribution '" + btype + "'");
        map.seed = doc.at("seed").get<std::uint64_t>();
        const auto biases = doc.at("biases").get<std::vector<double>>();
        if (static_cast<Index>(biases.size()) != map.N)
            throw ParseError("biases length does not match N");
        map.biases = Eigen::Map<const Eigen::VectorXd>(biases.data(), static_cast<Index>(biases.size()));
        const json& cols = doc.at("columns");
        if (static_cast<Index>(cols.size()) != map.N)
            throw ParseError("columns length does not match N");
        map.columns.reserve(cols.size());
        for (const json& c : cols) {
            FeatureMap::Column col;
            col.indices = c.at("indices").get<std::vector<std::uint32_t>>();
            col.values = c.at("values").get<std::vector<double>>();
            if (col.indices.size() != col.values.size())
                throw ParseError("column indices/values length mismatch");
            map.columns.push_back(std::move(col));
        }
    } catch (const json::exception& e) {
        throw ParseError(std::string("feature map JSON: ") + e.what());
    }
    return map;
}

}  // namespace harfe
