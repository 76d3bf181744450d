#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "tropicost/system.hpp"

using namespace tropicost;

namespace {

const char* kFourState = R"(dioid maxplus
states a b c d
init a
final d
edge a b 8
edge b c 3
edge c c 2
edge c d 4
edge d b 5
)";

}  // namespace

TEST_CASE("parsing the four-state example") {
  ParsedSystem parsed = parse_system(kFourState);
  const TransitionSystem& p = parsed.system;
  const auto& d = *p.dioid;

  CHECK(parsed.warnings.empty());
  CHECK(p.states == std::vector<std::string>{"a", "b", "c", "d"});
  CHECK(p.initial == std::vector<size_t>{0});
  CHECK(p.finals == std::vector<size_t>{3});
  CHECK(d.equal(p.matrix.at(0, 1), d.from_rational(8)));
  CHECK(d.equal(p.matrix.at(2, 2), d.from_rational(2)));
  CHECK(d.equal(p.matrix.at(3, 1), d.from_rational(5)));
  CHECK(d.equal(p.matrix.at(1, 0), d.bot()));
  CHECK(p.state_index("c") == size_t{2});
  CHECK_FALSE(p.state_index("z").has_value());
}

TEST_CASE("serialization round trips") {
  ParsedSystem first = parse_system(kFourState);
  std::string text = serialize_system(first.system);
  ParsedSystem second = parse_system(text);

  CHECK(second.system.states == first.system.states);
  CHECK(second.system.initial == first.system.initial);
  CHECK(second.system.finals == first.system.finals);
  CHECK(second.system.matrix == first.system.matrix);
  CHECK(serialize_system(second.system) == text);
}

TEST_CASE("set and vector costs round trip through files") {
  const char* set_sys = R"(dioid cup-cap
universe p q r
states x y
init x
final y
edge x y {p,r}
edge y y {}
)";
  ParsedSystem parsed = parse_system(set_sys);
  const auto& d = *parsed.system.dioid;
  std::vector<std::string> members{"p", "r"};
  CHECK(d.equal(parsed.system.matrix.at(0, 1), d.set_of(members)));
  CHECK(d.equal(parsed.system.matrix.at(1, 1), d.bot()));  // empty set
  ParsedSystem again = parse_system(serialize_system(parsed.system));
  CHECK(again.system.matrix == parsed.system.matrix);

  const char* vec_sys = R"(dioid minplus_vec(2)
states x y
init x
final y
edge x y (1/2,3)
)";
  ParsedSystem vp = parse_system(vec_sys);
  ParsedSystem vq = parse_system(serialize_system(vp.system));
  CHECK(vq.system.matrix == vp.system.matrix);
}

TEST_CASE("missing init and final fall back with warnings") {
  ParsedSystem parsed = parse_system("dioid maxplus\nstates a b\nedge a b 1\n");
  CHECK(parsed.warnings.size() == 2);
  CHECK(parsed.system.initial == std::vector<size_t>{0});
  CHECK(parsed.system.finals == std::vector<size_t>{1});
}

TEST_CASE("parse errors carry line positions") {
  auto line_of = [](const char* text) {
    try {
      parse_system(text);
    } catch (const ParseError& e) {
      return e.line;
    }
    return -1;
  };

  CHECK(line_of("dioid maxplus\nstates a b\nedge a z 1\n") == 3);
  CHECK(line_of("dioid maxplus\nstates a b\nedge a b oops\n") == 3);
  CHECK(line_of("dioid maxplus\nstates a a\n") == 2);
  CHECK(line_of("dioid maxplus\ndioid minplus\nstates a\n") == 2);
  CHECK(line_of("states a b\n") == 1);  // dioid must come first
  CHECK(line_of("dioid maxplus\nstates a b\nbogus a b\n") == 3);
  CHECK(line_of("dioid nosuch\nstates a b\n") == 2);
  CHECK_THROWS_AS(parse_system("dioid maxplus\n# nothing else\n"), ParseError);
}

TEST_CASE("duplicate edges need the merge directive") {
  const char* dup = "dioid maxplus\nstates a b\nedge a b 1\nedge a b 2\n";
  CHECK_THROWS_AS(parse_system(dup), ParseError);

  const char* merged =
      "dioid maxplus\nmerge-edges\nstates a b\nedge a b 1\nedge a b 2\n";
  ParsedSystem parsed = parse_system(merged);
  const auto& d = *parsed.system.dioid;
  CHECK(d.equal(parsed.system.matrix.at(0, 1), d.from_rational(2)));
}

TEST_CASE("reachability restriction drops disconnected states") {
  const char* island = R"(dioid maxplus
states a b orphan
init a
final b
edge a b 1
edge orphan orphan 99
)";
  ParsedSystem parsed = parse_system(island);
  std::vector<size_t> reach = reachable_states(parsed.system);
  CHECK(reach == std::vector<size_t>{0, 1});

  TransitionSystem cut = reachable_restrict(parsed.system);
  CHECK(cut.states == std::vector<std::string>{"a", "b"});
  CHECK(cut.initial == std::vector<size_t>{0});
  CHECK(cut.finals == std::vector<size_t>{1});
  const auto& d = *cut.dioid;
  CHECK(d.equal(cut.matrix.at(0, 1), d.from_rational(1)));
}

TEST_CASE("make_system validates its sets") {
  DioidPtr d = make_dioid(DioidKind::maxplus);
  CHECK_THROWS_AS(make_system(d, {"a", "a"}, {0}, {0}), Error);
  CHECK_THROWS_AS(make_system(d, {"a"}, {}, {0}), Error);
  CHECK_THROWS_AS(make_system(d, {"a"}, {0}, {1}), Error);
  CHECK_THROWS_AS(make_system(d, {"a"}, {0, 0}, {0}), Error);
  TransitionSystem p = make_system(d, {"a", "b"}, {1, 0}, {1});
  CHECK(p.initial == std::vector<size_t>{0, 1});  // sorted on entry
}
