#include "matintegra_cli/scalar_literal.hpp"

#include <cctype>
#include <optional>
#include <sstream>
#include <utility>

namespace matintegra::cli {
namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : s_(text) {}

    ExactComplex literal() {
        skip_space();
        auto [z, z_imag] = signed_term(true);
        skip_space();
        if (pos_ < s_.size()) {
            if (s_[pos_] != '+' && s_[pos_] != '-') {
                fail("expected '+', '-' or end of literal");
            }
            const std::size_t second_at = pos_;
            const auto [w, w_imag] = signed_term(false);
            if (z_imag == w_imag) {
                pos_ = second_at;
                fail("a complex literal needs one real and one imaginary part");
            }
            z += w;
        }
        skip_space();
        if (pos_ != s_.size()) {
            fail("trailing characters");
        }
        return z;
    }

private:
    // The term's value and whether it carried an 'i'.
    std::pair<ExactComplex, bool> signed_term(bool sign_optional) {
        skip_space();
        bool negative = false;
        if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) {
            negative = s_[pos_] == '-';
            ++pos_;
        } else if (!sign_optional) {
            fail("expected a sign");
        }
        skip_space();
        std::optional<Rational> value;
        if (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.')) {
            value = number();
        }
        ExactComplex term;
        bool imaginary = false;
        if (pos_ < s_.size() && s_[pos_] == 'i') {
            ++pos_;
            imaginary = true;
            term = ExactComplex(Rational(0), value ? *value : Rational(1));
        } else if (value) {
            term = ExactComplex(*value);
        } else {
            fail("expected a number or 'i'");
        }
        return {negative ? -term : term, imaginary};
    }

    mpz_class digits() {
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            ++pos_;
        }
        if (pos_ == start) {
            fail("expected digits");
        }
        return mpz_class(std::string(s_.substr(start, pos_ - start)));
    }

    Rational number() {
        const std::size_t start = pos_;
        mpz_class whole = 0;
        bool any = false;
        if (s_[pos_] != '.') {
            whole = digits();
            any = true;
        }
        if (pos_ < s_.size() && s_[pos_] == '/') {
            const std::size_t at = ++pos_;
            const mpz_class den = digits();
            if (den == 0) {
                pos_ = at;
                fail("zero denominator");
            }
            Rational r(whole, den);
            r.canonicalize();
            return r;
        }
        mpz_class num = whole;
        mpz_class den = 1;
        if (pos_ < s_.size() && s_[pos_] == '.') {
            ++pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                num = num * 10 + (s_[pos_] - '0');
                den *= 10;
                ++pos_;
                any = true;
            }
        }
        if (!any) {
            pos_ = start;
            fail("expected digits");
        }
        if (pos_ < s_.size() && (s_[pos_] == 'e' || s_[pos_] == 'E')) {
            ++pos_;
            bool neg_exp = false;
            if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) {
                neg_exp = s_[pos_] == '-';
                ++pos_;
            }
            const std::size_t exp_at = pos_;
            const mpz_class e = digits();
            if (e > 4096) {
                pos_ = exp_at;
                fail("exponent too large");
            }
            mpz_class scale;
            mpz_ui_pow_ui(scale.get_mpz_t(), 10, e.get_ui());
            (neg_exp ? den : num) *= scale;
        }
        Rational r(num, den);
        r.canonicalize();
        return r;
    }

    void skip_space() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) {
            ++pos_;
        }
    }

    [[noreturn]] void fail(const std::string& what) const {
        std::ostringstream os;
        os << "malformed scalar literal \"" << s_ << "\" at position " << pos_ << ": " << what;
        throw ScalarParseError(os.str(), pos_);
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

ScalarParseError::ScalarParseError(const std::string& message, std::size_t position)
    : std::invalid_argument(message), position_(position) {}

ExactComplex parse_scalar(std::string_view text) { return Parser(text).literal(); }

std::string format_scalar(const ExactComplex& z) {
    std::ostringstream os;
    os << z;
    return os.str();
}

}  // namespace matintegra::cli
