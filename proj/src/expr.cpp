#include "sftcross/expr.hpp"

#include <cctype>

namespace sftcross {

namespace {

class ExprParser {
  public:
    ExprParser(const std::string& text, const SystemFile& sys)
        : text_(text), sys_(sys) {}

    CrossedElement parse() {
        CrossedElement out = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return out;
    }

  private:
    const std::string& text_;
    const SystemFile& sys_;
    size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw InputError("expression: " + msg + " at offset " + std::to_string(pos_));
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    Integer integer() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (pos_ == start) fail("expected a number");
        return Integer(text_.substr(start, pos_ - start));
    }

    std::string ident() {
        skip_ws();
        size_t start = pos_;
        if (pos_ >= text_.size() ||
            !(std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            fail("expected an identifier");
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        return text_.substr(start, pos_ - start);
    }

    Rational rational() {
        Integer num = integer();
        if (eat('/')) {
            Integer den = integer();
            if (den == 0) fail("zero denominator");
            Rational q(num, den);
            q.canonicalize();
            return q;
        }
        return Rational(num);
    }

    Word word_of(const std::string& body) const {
        Word w;
        if (body.find('_') != std::string::npos) {
            size_t pos = 0;
            while (pos <= body.size()) {
                size_t sep = body.find('_', pos);
                if (sep == std::string::npos) sep = body.size();
                std::string part = body.substr(pos, sep - pos);
                if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
                    throw InputError("expression: bad symbol index \"" + part +
                                     "\" in e_" + body);
                w.push_back(std::stoi(part));
                pos = sep + 1;
            }
        } else {
            for (char ch : body) {
                if (!std::isdigit(static_cast<unsigned char>(ch)))
                    throw InputError("expression: bad symbol index in e_" + body);
                w.push_back(ch - '0');
            }
        }
        for (Symbol s : w)
            if (s >= sys_.matrix.symbol_count())
                throw InputError("expression: symbol index out of range in e_" + body);
        if (!is_admissible(sys_.matrix, w))
            throw InputError("expression: e_" + body + " names an inadmissible word");
        return w;
    }

    CrossedElement atom() {
        const TransitionMatrix& A = sys_.matrix;
        if (eat('(')) {
            CrossedElement inner = expr();
            if (!eat(')')) fail("expected ')'");
            return inner;
        }
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c)))
            return CrossedElement::from_scalar(A, RadScalar(rational()));
        std::string name = ident();
        if (name == "S") return CrossedElement::isometry(A);
        if (name == "sqrt") {
            if (!eat('(')) fail("expected '(' after sqrt");
            Rational q = rational();
            if (!eat(')')) fail("expected ')'");
            return CrossedElement::from_scalar(A, sqrt_nonneg_rational(q));
        }
        if (name == "i") return CrossedElement::from_scalar(A, RadScalar::i());
        if (auto it = sys_.functions.find(name); it != sys_.functions.end())
            return CrossedElement::from_function(it->second);
        if (name == "Lam" || name == "ind")
            return CrossedElement::from_function(quasi_basis(A).lambda);
        if (name.size() > 1 && name[0] == 'u' &&
            name.find_first_not_of("0123456789", 1) == std::string::npos) {
            int k = std::stoi(name.substr(1));
            if (k >= A.symbol_count()) fail("quasi-basis index out of range in " + name);
            return CrossedElement::from_function(quasi_basis(A).u[k]);
        }
        if (name.size() >= 2 && name[0] == 'e' && name[1] == '_')
            return CrossedElement::from_function(
                CylFun::indicator(A, word_of(name.substr(2))));
        fail("unknown identifier \"" + name + "\"");
    }

    CrossedElement factor() {
        CrossedElement base = atom();
        if (eat('^')) {
            Integer n = integer();
            if (n > 16) fail("exponent too large");
            CrossedElement out = CrossedElement::unit(sys_.matrix);
            for (Integer j = 0; j < n; ++j) out = out * base;
            base = out;
        }
        if (eat('\'')) base = base.adjoint();
        return base;
    }

    CrossedElement term() {
        bool neg = eat('-');
        CrossedElement out = factor();
        while (eat('*')) out = out * factor();
        return neg ? -out : out;
    }

    CrossedElement expr() {
        CrossedElement out = term();
        for (;;) {
            if (eat('+')) {
                out += term();
            } else if (eat('-')) {
                out -= term();
            } else {
                return out;
            }
        }
    }
};

}  // namespace

CrossedElement parse_expression(const std::string& text, const SystemFile& sys) {
    return ExprParser(text, sys).parse();
}

}  // namespace sftcross
