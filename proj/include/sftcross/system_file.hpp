#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sftcross/measure.hpp"

namespace sftcross {

// Parsed system definition: named symbols, transition matrix, optional edge
// weights, and named cylinder-function tables. Function tables must cover
// exactly the admissible words of their depth.
struct SystemFile {
    std::vector<std::string> symbols;
    TransitionMatrix matrix;
    std::optional<TransferWeights> weights;
    std::map<std::string, CylFun> functions;

    Symbol symbol_index(const std::string& name) const;
    // Juxtaposed single-character names, or dot-separated names; "" is the
    // empty word.
    Word parse_word(const std::string& text) const;
    std::string word_name(const Word& w) const;
    TransferWeights effective_weights() const;
};

SystemFile parse_system(const std::string& text);
SystemFile load_system(const std::string& path);

}  // namespace sftcross
