#include "doctest.h"

#include "dinitz/instance_io.hpp"

using namespace dinitz;

TEST_CASE("instance parsing") {
    const std::string text = R"({
        "r": 1, "n": 2,
        "lists": [[[7, 5], [9, 5, 5]]]
    })";
    const ListAssignment lists = parse_instance_json(text);
    CHECK(lists.rows() == 1);
    CHECK(lists.cols() == 2);
    CHECK(lists.list_symbols(1, 1) ==
          std::vector<Symbol>{Symbol{std::int64_t{5}}, Symbol{std::int64_t{7}}});
    // duplicates collapse
    CHECK(lists.list_symbols(1, 2) ==
          std::vector<Symbol>{Symbol{std::int64_t{5}}, Symbol{std::int64_t{9}}});
}

TEST_CASE("canonical serialization is idempotent and sorted") {
    const std::string text = R"({"n": 2, "lists": [[[7, 5], ["ignored"]]], "r": 1})";
    // Fix the mixed-type cell first; strings and ints cannot share a file.
    const std::string valid = R"({"n": 2, "lists": [[[7, 5], [9, 5]]], "r": 1})";
    const std::string canonical = canonical_instance_json(parse_instance_json(valid));
    CHECK(canonical == R"({"r":1,"n":2,"lists":[[[5,7],[5,9]]]})");
    CHECK(canonical_instance_json(parse_instance_json(canonical)) == canonical);
    CHECK_THROWS_AS(parse_instance_json(text), InstanceParseError);
}

TEST_CASE("string instances serialize canonically too") {
    const std::string text =
        R"({"r":1,"n":2,"lists":[[["oak","ash"],["elm","ash"]]]})";
    const std::string canonical = canonical_instance_json(parse_instance_json(text));
    CHECK(canonical == R"({"r":1,"n":2,"lists":[[["ash","oak"],["ash","elm"]]]})");
    CHECK(canonical_instance_json(parse_instance_json(canonical)) == canonical);
}

TEST_CASE("instance parse errors") {
    CHECK_THROWS_AS(parse_instance_json("not json"), InstanceParseError);
    CHECK_THROWS_AS(parse_instance_json("[1,2]"), InstanceParseError);
    CHECK_THROWS_AS(parse_instance_json(R"({"r":1,"n":2})"), InstanceParseError);
    CHECK_THROWS_AS(parse_instance_json(R"({"r":0,"n":2,"lists":[]})"),
                    InstanceParseError);
    // row/cell counts must match r and n
    CHECK_THROWS_AS(parse_instance_json(R"({"r":2,"n":1,"lists":[[[1]]]})"),
                    InstanceParseError);
    CHECK_THROWS_AS(parse_instance_json(R"({"r":1,"n":2,"lists":[[[1]]]})"),
                    InstanceParseError);
    // empty cell list
    CHECK_THROWS_AS(parse_instance_json(R"({"r":1,"n":2,"lists":[[[1],[]]]})"),
                    InstanceParseError);
    // symbols must be scalars
    CHECK_THROWS_AS(parse_instance_json(R"({"r":1,"n":1,"lists":[[[[1]]]]})"),
                    InstanceParseError);
    // mixed int and string symbols
    CHECK_THROWS_AS(parse_instance_json(R"({"r":1,"n":2,"lists":[[[1],["a"]]]})"),
                    InstanceParseError);
}

TEST_CASE("candidate parsing accepts bare arrays and wrapped objects") {
    const SymbolGrid bare = parse_candidate_json(R"([[0, 1], [1, 0]])");
    CHECK(bare.size() == 2);
    CHECK(bare[0][1] == Symbol{std::int64_t{1}});

    const SymbolGrid wrapped = parse_candidate_json(R"({"rectangle": [["a", "b"]]})");
    CHECK(wrapped.size() == 1);
    CHECK(wrapped[0][0] == Symbol{std::string{"a"}});

    CHECK_THROWS_AS(parse_candidate_json(R"({"other": 1})"), InstanceParseError);
    CHECK_THROWS_AS(parse_candidate_json("[]"), InstanceParseError);
    CHECK_THROWS_AS(parse_candidate_json(R"([[1, "a"]])"), InstanceParseError);
}

TEST_CASE("missing files raise parse errors") {
    CHECK_THROWS_AS(load_instance_file("/nonexistent/instance.json"),
                    InstanceParseError);
    CHECK_THROWS_AS(load_candidate_file("/nonexistent/candidate.json"),
                    InstanceParseError);
}
