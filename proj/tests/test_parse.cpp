#include "keller/parse.hpp"

#include "helpers.hpp"

#include <doctest.h>

using namespace keller;
using keller::testing::xy;
using keller::testing::xyz;

namespace {

ParseError capture(const std::string& text, const std::vector<std::string>& vars) {
    try {
        parse_poly(text, vars);
    } catch (const ParseError& e) {
        return e;
    }
    FAIL("expected ParseError for: " << text);
    throw std::logic_error("unreachable");
}

}  // namespace

TEST_CASE("basic expressions") {
    CHECK(parse_poly("x + y^2", xy()) ==
          Polynomial::variable(2, 0) +
              Polynomial::from_monomial(Monomial(std::vector<std::uint32_t>{0, 2}), Rational(1)));
    CHECK(parse_poly("-2*y", xy()) ==
          Polynomial::from_monomial(Monomial(std::vector<std::uint32_t>{0, 1}), Rational(-2)));
    CHECK(parse_poly("  x+y ^ 2 ", xy()) == parse_poly("x + y^2", xy()));
    CHECK(parse_poly("0", xy()).is_zero());
    CHECK(parse_poly("x - x", xy()).is_zero());
}

TEST_CASE("rational literals") {
    CHECK(parse_poly("1/2", xy()) == Polynomial::constant(2, Rational(1, 2)));
    CHECK(parse_poly("-7/2*x*y^3", xy()) ==
          Polynomial::from_monomial(Monomial(std::vector<std::uint32_t>{1, 3}), Rational(-7, 2)));
    CHECK(parse_poly("2/4*x", xy()) ==
          Polynomial::from_monomial(Monomial(std::vector<std::uint32_t>{1, 0}), Rational(1, 2)));
    // '/' only forms literals, never a division operator
    const ParseError e = capture("x/2", xy());
    CHECK(e.column() == 2);
}

TEST_CASE("the Nagata component expands to the hand expansion") {
    const Polynomial parsed =
        parse_poly("x - 2*y*(x*z + y^2) - z*(x*z + y^2)^2", xyz());
    // built from operations only, no parser involved
    const Polynomial x = Polynomial::variable(3, 0);
    const Polynomial y = Polynomial::variable(3, 1);
    const Polynomial z = Polynomial::variable(3, 2);
    const Polynomial w = x * z + y * y;
    CHECK(parsed == x - Rational(2) * (y * w) - z * (w * w));
    CHECK(parsed.degree() == 5);
}

TEST_CASE("syntax errors carry positions") {
    const ParseError plus = capture("x + + y", xy());
    CHECK(plus.line() == 1);
    CHECK(plus.column() == 5);

    const ParseError unknown = capture("x + q", xy());
    CHECK(unknown.column() == 5);
    CHECK(std::string(unknown.what()).find("unknown variable 'q'") != std::string::npos);

    const ParseError trailing = capture("x*", xy());
    CHECK(trailing.column() == 3);

    const ParseError unclosed = capture("(x + y", xy());
    CHECK(unclosed.column() == 7);

    const ParseError stray = capture("x )", xy());
    CHECK(stray.column() == 3);

    const ParseError empty = capture("", xy());
    CHECK(empty.column() == 1);
}

TEST_CASE("exponent validation") {
    const ParseError neg = capture("x^-2", xy());
    CHECK(std::string(neg.what()).find("nonnegative integer") != std::string::npos);
    CHECK(neg.column() == 3);

    const ParseError paren = capture("x^(2)", xy());
    CHECK(std::string(paren.what()).find("nonnegative integer") != std::string::npos);

    const ParseError frac = capture("x^1/2", xy());
    CHECK(frac.column() == 4);

    CHECK(parse_poly("x^0", xy()) == Polynomial::constant(2, Rational(1)));
    CHECK(parse_poly("(x + y)^2", xy()) == parse_poly("x^2 + 2*x*y + y^2", xy()));
}

TEST_CASE("line offsets shift reported positions") {
    const ParseError e = [&] {
        try {
            parse_poly("x + ", xy(), 12);
        } catch (const ParseError& err) {
            return err;
        }
        throw std::logic_error("unreachable");
    }();
    CHECK(e.line() == 12);
}

TEST_CASE("identifier validation") {
    CHECK(is_valid_identifier("x"));
    CHECK(is_valid_identifier("y_2"));
    CHECK(is_valid_identifier("Var3"));
    CHECK(!is_valid_identifier("_x"));
    CHECK(!is_valid_identifier("2x"));
    CHECK(!is_valid_identifier(""));
    CHECK(!is_valid_identifier("a-b"));
}
