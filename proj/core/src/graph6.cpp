#include "cyclex/graph6.hpp"

#include "cyclex/error.hpp"

namespace cyclex {

namespace {

constexpr int kBias = 63;
constexpr int kShortFormMax = 62;

std::size_t body_length(int n) {
    const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
    return (bits + 5) / 6;
}

}  // namespace

Graph decode_graph6(std::string_view text, int vertex_cap) {
    if (text.empty()) throw Error(ErrorCode::MalformedHeader, "empty graph6 string");
    const int header = static_cast<unsigned char>(text.front());
    if (header == 126) throw Error(ErrorCode::LongFormUnsupported, "graph6 long form (n > 62)");
    if (header < kBias || header > kBias + kShortFormMax) {
        throw Error(ErrorCode::MalformedHeader, "header byte " + std::to_string(header));
    }
    const int n = header - kBias;
    if (n > vertex_cap || n > kMaxVertices) {
        throw Error(ErrorCode::TooManyVertices,
                    "n=" + std::to_string(n) + " exceeds cap " + std::to_string(vertex_cap));
    }
    const std::string_view body = text.substr(1);
    for (char c : body) {
        const int byte = static_cast<unsigned char>(c);
        if (byte < kBias || byte > kBias + 63) {
            throw Error(ErrorCode::InvalidCharacter, "byte " + std::to_string(byte));
        }
    }
    if (body.size() != body_length(n)) {
        throw Error(ErrorCode::LengthMismatch, "expected " + std::to_string(body_length(n)) +
                                                   " body bytes, got " + std::to_string(body.size()));
    }

    GraphBuilder builder(n);
    std::size_t bit = 0;
    auto next_bit = [&]() {
        const int byte = static_cast<unsigned char>(body[bit / 6]) - kBias;
        const bool set = (byte >> (5 - bit % 6)) & 1;
        ++bit;
        return set;
    };
    // Column-major upper triangle: x(0,1), x(0,2), x(1,2), x(0,3), ...
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            if (next_bit()) builder.add_edge(i, j);
        }
    }
    while (bit < body.size() * 6) {
        if (next_bit()) throw Error(ErrorCode::TrailingBitsNonzero, "padding bits must be zero");
    }
    return builder.build();
}

std::string encode_graph6(const Graph& g) {
    const int n = g.order();
    if (n > kShortFormMax) {
        throw Error(ErrorCode::UnsupportedSize, "short-form graph6 supports n <= 62, got " + std::to_string(n));
    }
    std::string out(1 + body_length(n), static_cast<char>(kBias));
    out[0] = static_cast<char>(kBias + n);
    std::size_t bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            if (g.adjacent(i, j)) out[1 + bit / 6] = static_cast<char>(out[1 + bit / 6] + (1 << (5 - bit % 6)));
            ++bit;
        }
    }
    return out;
}

}  // namespace cyclex
