#pragma once

#include <string>
#include <vector>

#include "circulant/verify.hpp"

namespace circulant::cli {

// Stable interchange form of an embedding.  Key order is fixed; edges are
// listed canonically; the palette names the fixed page -> color map.
std::string to_document_json(const CirculantSpec& spec, const BookEmbedding& emb);

struct ParsedDocument {
    int n = 0;
    std::vector<int> jumps;
    BookEmbedding emb;
};
ParsedDocument parse_document_json(const std::string& text);

// Circular chord drawing: vertex i of the layout sits at angle 2*pi*i/n.
std::string to_svg(const CirculantSpec& spec, const BookEmbedding& emb);
std::string to_dot(const CirculantSpec& spec, const BookEmbedding& emb);

// Command-line entry point; args exclude the program name.
// Exit codes: 0 ok, 2 bad usage/input, 3 verification failure, 4 sweep
// discrepancy.
int run(const std::vector<std::string>& args);

}  // namespace circulant::cli
