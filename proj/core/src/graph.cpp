#include "cyclex/graph.hpp"

#include <string>

#include "cyclex/error.hpp"

namespace cyclex {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::MalformedHeader: return "malformed-header";
        case ErrorCode::LongFormUnsupported: return "long-form-unsupported";
        case ErrorCode::InvalidCharacter: return "invalid-character";
        case ErrorCode::LengthMismatch: return "length-mismatch";
        case ErrorCode::TrailingBitsNonzero: return "trailing-bits-nonzero";
        case ErrorCode::UnsupportedSize: return "unsupported-size";
        case ErrorCode::TooManyVertices: return "too-many-vertices";
        case ErrorCode::VertexOutOfRange: return "vertex-out-of-range";
        case ErrorCode::SelfLoop: return "self-loop";
        case ErrorCode::InvalidParameter: return "invalid-parameter";
        case ErrorCode::EmptyGraph: return "empty-graph";
        case ErrorCode::CompleteGraph: return "complete-graph";
        case ErrorCode::Disconnected: return "disconnected";
        case ErrorCode::NoPath: return "no-path";
        case ErrorCode::SearchCapExceeded: return "search-cap-exceeded";
        case ErrorCode::BudgetExhausted: return "budget-exhausted";
        case ErrorCode::Cancelled: return "cancelled";
        case ErrorCode::GuardViolated: return "guard-violated";
        case ErrorCode::InvalidScheme: return "invalid-scheme";
        case ErrorCode::TrivialScheme: return "trivial-scheme";
        case ErrorCode::NotSpecialCase: return "not-special-case";
        case ErrorCode::NoValidSystem: return "no-valid-system";
        case ErrorCode::UnknownStatement: return "unknown-statement";
    }
    return "unknown";
}

std::string VertexSet::to_string() const {
    std::string out = "{";
    bool first_member = true;
    for (int v : *this) {
        if (!first_member) out += ',';
        out += std::to_string(v);
        first_member = false;
    }
    out += '}';
    return out;
}

namespace {

void check_order(int n) {
    if (n < 0 || n > kMaxVertices) {
        throw Error(ErrorCode::TooManyVertices,
                    "graph order " + std::to_string(n) + " outside 0.." + std::to_string(kMaxVertices));
    }
}

void check_endpoints(int n, int u, int v) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
        throw Error(ErrorCode::VertexOutOfRange,
                    "edge {" + std::to_string(u) + "," + std::to_string(v) + "} in graph of order " +
                        std::to_string(n));
    }
    if (u == v) throw Error(ErrorCode::SelfLoop, "vertex " + std::to_string(u));
}

}  // namespace

Graph::Graph(int n) {
    check_order(n);
    rows_.resize(static_cast<std::size_t>(n));
}

Graph::Graph(int n, std::span<const Edge> edges) {
    GraphBuilder builder(n);
    for (auto [u, v] : edges) builder.add_edge(u, v);
    *this = builder.build();
}

VertexSet Graph::neighbors_of(VertexSet s) const {
    VertexSet out;
    for (int v : s) out |= rows_[v];
    return out;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(edges_));
    for (int u = 0; u < order(); ++u) {
        for (int v : rows_[u]) {
            if (u < v) out.emplace_back(u, v);
        }
    }
    return out;
}

Graph Graph::with_edge(int u, int v) const {
    check_endpoints(order(), u, v);
    Graph out = *this;
    if (!out.rows_[u].contains(v)) {
        out.rows_[u].insert(v);
        out.rows_[v].insert(u);
        ++out.edges_;
    }
    return out;
}

Graph Graph::without_edge(int u, int v) const {
    check_endpoints(order(), u, v);
    Graph out = *this;
    if (out.rows_[u].contains(v)) {
        out.rows_[u].erase(v);
        out.rows_[v].erase(u);
        --out.edges_;
    }
    return out;
}

GraphBuilder::GraphBuilder(int n) {
    check_order(n);
    rows_.resize(static_cast<std::size_t>(n));
}

GraphBuilder& GraphBuilder::add_edge(int u, int v) {
    check_endpoints(order(), u, v);
    rows_[u].insert(v);
    rows_[v].insert(u);
    return *this;
}

GraphBuilder& GraphBuilder::connect(VertexSet a, VertexSet b) {
    for (int u : a) {
        for (int v : b) {
            if (u != v) add_edge(u, v);
        }
    }
    return *this;
}

GraphBuilder& GraphBuilder::make_clique(VertexSet s) { return connect(s, s); }

Graph GraphBuilder::build() const {
    Graph g;
    g.rows_ = rows_;
    int degree_sum = 0;
    for (VertexSet row : rows_) degree_sum += row.size();
    g.edges_ = degree_sum / 2;
    return g;
}

}  // namespace cyclex
