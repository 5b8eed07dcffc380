#include "sftcross/system_file.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace sftcross {

namespace {

using nlohmann::json;

Rational parse_rational_literal(const std::string& text, const std::string& where) {
    RadScalar v = parse_scalar(text);
    if (!v.is_rational())
        throw InputError(where + ": expected a rational, got \"" + text + "\"");
    return v.rational_value();
}

std::vector<std::string> read_symbols(const json& j) {
    if (!j.contains("symbols") || !j["symbols"].is_array())
        throw InputError("system file needs a \"symbols\" array");
    std::vector<std::string> out;
    for (const auto& s : j["symbols"]) {
        if (!s.is_string()) throw InputError("symbol names must be strings");
        std::string name = s.get<std::string>();
        if (name.empty()) throw InputError("symbol names must be nonempty");
        for (char ch : name)
            if (ch == '.' || ch == ':' || ch == ',' || ch == ' ' || ch == '\t')
                throw InputError("symbol name \"" + name +
                                 "\" contains a reserved character");
        out.push_back(std::move(name));
    }
    for (size_t i = 0; i < out.size(); ++i)
        for (size_t j2 = i + 1; j2 < out.size(); ++j2)
            if (out[i] == out[j2])
                throw InputError("duplicate symbol name \"" + out[i] + "\"");
    return out;
}

TransitionMatrix read_matrix(const json& j, size_t n) {
    if (!j.contains("matrix") || !j["matrix"].is_array())
        throw InputError("system file needs a \"matrix\" array of 0/1 rows");
    std::vector<std::vector<int>> rows;
    for (const auto& row : j["matrix"]) {
        if (!row.is_array()) throw InputError("matrix rows must be arrays");
        std::vector<int> r;
        for (const auto& e : row) {
            if (!e.is_number_integer())
                throw InputError("matrix entries must be integers");
            r.push_back(e.get<int>());
        }
        rows.push_back(std::move(r));
    }
    if (rows.size() != n)
        throw InputError("matrix has " + std::to_string(rows.size()) +
                         " rows for " + std::to_string(n) + " symbols");
    return TransitionMatrix(std::move(rows));
}

}  // namespace

Symbol SystemFile::symbol_index(const std::string& name) const {
    for (size_t i = 0; i < symbols.size(); ++i)
        if (symbols[i] == name) return static_cast<Symbol>(i);
    throw InputError("unknown symbol \"" + name + "\"");
}

Word SystemFile::parse_word(const std::string& text) const {
    Word w;
    if (text.empty()) return w;
    if (text.find('.') != std::string::npos) {
        size_t pos = 0;
        while (pos <= text.size()) {
            size_t dot = text.find('.', pos);
            if (dot == std::string::npos) dot = text.size();
            w.push_back(symbol_index(text.substr(pos, dot - pos)));
            pos = dot + 1;
        }
        return w;
    }
    bool single = true;
    for (const std::string& s : symbols)
        if (s.size() != 1) single = false;
    if (!single) {
        w.push_back(symbol_index(text));
        return w;
    }
    for (char ch : text) w.push_back(symbol_index(std::string(1, ch)));
    return w;
}

std::string SystemFile::word_name(const Word& w) const {
    bool single = true;
    for (const std::string& s : symbols)
        if (s.size() != 1) single = false;
    std::string out;
    for (size_t j = 0; j < w.size(); ++j) {
        if (w[j] < 0 || w[j] >= static_cast<Symbol>(symbols.size()))
            throw InputError("symbol index out of range");
        if (!single && j) out += '.';
        out += symbols[w[j]];
    }
    return out;
}

TransferWeights SystemFile::effective_weights() const {
    return weights ? *weights : uniform_weights(matrix);
}

SystemFile parse_system(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw InputError("system file must be a JSON object");

    std::vector<std::string> symbols = read_symbols(j);
    TransitionMatrix A = read_matrix(j, symbols.size());
    SystemFile sys{symbols, A, std::nullopt, {}};

    if (j.contains("weights")) {
        if (!j["weights"].is_object())
            throw InputError("\"weights\" must map \"b->c\" edges to rationals");
        std::map<std::pair<Symbol, Symbol>, Rational> w;
        for (const auto& [key, val] : j["weights"].items()) {
            size_t arrow = key.find("->");
            if (arrow == std::string::npos)
                throw InputError("weight key \"" + key + "\" is not of the form b->c");
            Symbol b = sys.symbol_index(key.substr(0, arrow));
            Symbol c = sys.symbol_index(key.substr(arrow + 2));
            if (!val.is_string())
                throw InputError("weight for \"" + key + "\" must be a rational string");
            w[{b, c}] = parse_rational_literal(val.get<std::string>(), "weight " + key);
        }
        sys.weights = TransferWeights(A, std::move(w));
    }

    if (j.contains("functions")) {
        if (!j["functions"].is_object())
            throw InputError("\"functions\" must map names to {depth, values}");
        for (const auto& [name, spec] : j["functions"].items()) {
            if (name.empty()) throw InputError("function names must be nonempty");
            if (!spec.is_object() || !spec.contains("depth") ||
                !spec.contains("values") || !spec["depth"].is_number_integer() ||
                !spec["values"].is_object())
                throw InputError("function \"" + name +
                                 "\" needs integer \"depth\" and object \"values\"");
            int depth = spec["depth"].get<int>();
            if (depth < 0)
                throw InputError("function \"" + name + "\": negative depth");
            std::map<Word, RadScalar> vals;
            for (const auto& [wkey, vtext] : spec["values"].items()) {
                if (!vtext.is_string())
                    throw InputError("function \"" + name + "\": value for \"" +
                                     wkey + "\" must be a scalar string");
                Word w = sys.parse_word(wkey);
                if (static_cast<int>(w.size()) != depth)
                    throw InputError("function \"" + name + "\": word \"" + wkey +
                                     "\" does not have depth " + std::to_string(depth));
                if (!is_admissible(A, w))
                    throw InputError("function \"" + name + "\": word \"" + wkey +
                                     "\" is not admissible");
                if (!vals.emplace(std::move(w), parse_scalar(vtext.get<std::string>())).second)
                    throw InputError("function \"" + name + "\": word \"" + wkey +
                                     "\" listed twice");
            }
            for (const Word& w : admissible_words(A, depth))
                if (!vals.count(w))
                    throw InputError("function \"" + name + "\": missing value for [" +
                                     sys.word_name(w) + "]");
            sys.functions.emplace(name, CylFun(A, depth, vals));
        }
    }
    return sys;
}

SystemFile load_system(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open \"" + path + "\"");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_system(buf.str());
}

}  // namespace sftcross
