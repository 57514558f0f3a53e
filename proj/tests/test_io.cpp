#include "core/io.hpp"

#include "doctest.h"

using namespace mpkit;

namespace {
FieldPtr f4() { return make_field(2, 2); }
FieldPtr f9() { return make_field(3, 2); }
} // namespace

TEST_CASE("field lines round trip") {
  CHECK(format_field_line(f4()) == "field p=2 m=2 modulus=1,1,1");
  CHECK(format_field_line(f9()) == "field p=3 m=2 modulus=1,0,1");
  CHECK(same_field(parse_field_line("field p=2 m=2 modulus=1,1,1"), f4()));
  CHECK(same_field(parse_field_line(format_field_line(f9())), f9()));
  CHECK_THROWS_AS(parse_field_line("field p=2 m=2"), error);
  CHECK_THROWS_AS(parse_field_line("campo p=2 m=2 modulus=1,1,1"), error);
}

TEST_CASE("matrices round trip, with comments and blank lines tolerated") {
  Matrix m(f4(), 2, 3, {1, 0, 2, 3, 1, 0});
  std::string text = format_matrix(m);
  CHECK(text == "field p=2 m=2 modulus=1,1,1\nrows=2 cols=3\n1,0,2\n3,1,0\n");
  CHECK(parse_matrix(text) == m);

  std::string commented = "# a matrix\n\nfield p=2 m=2 modulus=1,1,1\n"
                          "rows=2 cols=3\n# data follows\n1,0,2\n\n3,1,0\n";
  CHECK(parse_matrix(commented) == m);

  CHECK_THROWS_AS(parse_matrix("field p=2 m=2 modulus=1,1,1\nrows=2 cols=3\n1,0,2\n"), error);
  CHECK_THROWS_AS(parse_matrix("field p=2 m=2 modulus=1,1,1\nrows=1 cols=2\n1,0,2\n"), error);
  CHECK_THROWS_AS(parse_matrix(text + "9,9,9\n"), error); // trailing content
  CHECK_THROWS_AS(parse_matrix("field p=2 m=2 modulus=1,1,1\nrows=1 cols=1\n7\n"), error);
}

TEST_CASE("codes round trip and validate their header") {
  LinearCode c = make_code(Matrix(f4(), 2, 3, {1, 0, 1, 0, 1, 2}));
  std::string text = format_code(c);
  CHECK(parse_code(text) == c);
  CHECK(text.rfind("code n=3\n", 0) == 0);
  CHECK_THROWS_AS(parse_code("code n=2\nfield p=2 m=2 modulus=1,1,1\nrows=1 cols=3\n1,0,1\n"),
                  error);
}

TEST_CASE("matrix-product specs round trip") {
  Matrix a(f9(), 2, 3, {1, 0, 0, 0, 1, 0});
  LinearCode c1 = make_code(Matrix(f9(), 1, 2, {1, 3}));
  LinearCode c2 = make_code(Matrix(f9(), 2, 2, {1, 0, 0, 1}));
  MPSpec s = make_mpspec(a, {c1, c2});
  std::string text = format_mpspec(s);
  MPSpec back = parse_mpspec(text);
  CHECK(back.a == s.a);
  CHECK(back.codes == s.codes);
  CHECK(format_mpspec(back) == text);

  // the defining matrix determines how many code blocks must follow
  CHECK_THROWS_AS(parse_mpspec(text + "code n=2\nrows=1 cols=2\n1,0\n"), error);
  std::string truncated = text.substr(0, text.rfind("code"));
  CHECK_THROWS_AS(parse_mpspec(truncated), error);
  CHECK_THROWS_AS(parse_mpspec("field p=3 m=2 modulus=1,0,1\nrows=1 cols=1\n1\n"), error);
}

TEST_CASE("reports render one key=value per line in order") {
  Report r;
  r.emplace_back("alpha", "1");
  r.emplace_back("beta.gamma", "(1 2)");
  r.emplace_back("text", "a = b"); // values may contain '='
  CHECK(render_report(r) == "alpha=1\nbeta.gamma=(1 2)\ntext=a = b\n");
  CHECK(bool_token(true) == "true");
  CHECK(bool_token(false) == "false");
  CHECK(std::string(errc_token(errc::cap_exceeded)) == "cap_exceeded");
  CHECK(std::string(errc_token(errc::not_monomial)) == "not_monomial");
}

TEST_CASE("classification report carries the full verdict") {
  Matrix a(f4(), 2, 2, {1, 1, 1, 2});
  LinearCode c = make_code(Matrix(f4(), 1, 2, {1, 1}));
  MPSpec s = make_mpspec(a, {c, c});
  std::string text = render_report(classification_report(s, classify(s)));
  CHECK(text.find("tau=(1 2)\n") != std::string::npos);
  CHECK(text.find("hull_dim=2\n") != std::string::npos);
  CHECK(text.find("dim=2\n") != std::string::npos);
  CHECK(text.find("dual_dim=2\n") != std::string::npos);
  CHECK(text.find("meet.1=1\n") != std::string::npos);
  CHECK(text.find("meet.2=1\n") != std::string::npos);
  CHECK(text.find("flag.HDC=true\n") != std::string::npos);
  CHECK(text.find("flag.HSO=true\n") != std::string::npos);
  CHECK(text.find("flag.AHDC=false\n") != std::string::npos);
  CHECK(text.find("flag.HLCD=false\n") != std::string::npos);
}

TEST_CASE("screen and bound reports") {
  Matrix one(f4(), 1, 1, {1});
  MPSpec s = make_mpspec(one, {make_code(Matrix(f4(), 1, 3, {1, 0, 0}))});
  std::string text = render_report(screen_report(nonexistence_screen(s)));
  CHECK(text.find("obstruction.ahdc_parity=true\n") != std::string::npos);
  CHECK(text.find("screen.ahdc_ruled_out=true\n") != std::string::npos);

  std::string bound = render_report(bound_report(distance_bound(s, bound_method::prefix)));
  CHECK(bound == "bound=1\nbound.method=prefix\n");
}

TEST_CASE("involution and table reports") {
  std::string inv = render_report(involutions_report(3));
  CHECK(inv == "count=4\ninvolution.1=id\ninvolution.2=(2 3)\ninvolution.3=(1 2)\n"
               "involution.4=(1 3)\n");

  std::string table = render_report(table_report(2));
  CHECK(table.find("count=2\n") != std::string::npos);
  CHECK(table.find("row.1.tau=id\n") != std::string::npos);
  CHECK(table.find("row.1.dual_containing=dualH(C1) <= C1; dualH(C2) <= C2\n") !=
        std::string::npos);
  CHECK(table.find("row.2.tau=(1 2)\n") != std::string::npos);
  CHECK(table.find("row.2.self_orthogonal=C1 <= dualH(C2)\n") != std::string::npos);
}
