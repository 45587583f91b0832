#include <doctest.h>

#include "eip/io.hpp"
#include "support/oracles.hpp"

using namespace eip;

namespace {

std::string parse_message(const std::string& text) {
  try {
    (void)rep_from_json(parse_json(text, "in.json"));
  } catch (const ParseError& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_CASE("representations round-trip bit-exactly") {
  PrimeField f(5);
  std::mt19937_64 rng(3);
  auto corpus = oracle::family_corpus(f);
  for (int t = 0; t < 5; ++t) corpus.push_back(oracle::random_valid_rep(f, 3, 3, {2, 2, 3}, rng));
  for (const auto& m : corpus) {
    const std::string text = dump_canonical(to_json(m));
    const auto back = rep_from_json(parse_json(text));
    CHECK(back == m);
    CHECK(dump_canonical(to_json(back)) == text);
  }
}

TEST_CASE("kE_r-modules round-trip") {
  PrimeField f(3);
  for (const auto& m : {forget(m_module(f, 3, 2, 3, 2)), group_algebra_radical_power(f, 2, 1), trivial_module(f, 3, 0)}) {
    const std::string text = dump_canonical(to_json(m));
    CHECK(ermodule_from_json(parse_json(text)) == m);
  }
}

TEST_CASE("canonical layout") {
  PrimeField f(5);
  const std::string text = dump_canonical(to_json(e_lambda(f, 2, {1, 3})));
  CHECK(text ==
        "{\n"
        "  \"type\": \"beilinson\",\n"
        "  \"p\": 5,\n"
        "  \"n\": 2,\n"
        "  \"r\": 2,\n"
        "  \"dims\": [1, 1],\n"
        "  \"maps\": [\n"
        "    [\n"
        "      [\n"
        "        [1]\n"
        "      ],\n"
        "      [\n"
        "        [3]\n"
        "      ]\n"
        "    ]\n"
        "  ]\n"
        "}\n");
  CHECK(dump_canonical(Json::array()) == "[]\n");
  CHECK(dump_canonical(Json::object()) == "{}\n");
}

TEST_CASE("syntax errors carry line and column") {
  const auto msg = parse_message("{\n  \"p\": 5,\n  oops\n}");
  CHECK(msg.rfind("in.json:3:3:", 0) == 0);
  CHECK(parse_message("").rfind("in.json:1:1:", 0) == 0);
  CHECK_THROWS_AS((void)read_json_file("/nonexistent/file.json"), ParseError);
}

TEST_CASE("semantic errors name the JSON path") {
  const std::string head = R"({"type": "beilinson", "p": 5, "n": 2, "r": 2, "dims": [1, 2], )";
  CHECK(parse_message(head + R"("maps": [[[[1]], [[0], [1]]]]})") == "maps[0][0]: expected 2 rows, got 1");
  CHECK(parse_message(head + R"("maps": [[[[1], [2]], [[0], [1, 1]]]]})") ==
        "maps[0][1][1]: expected 1 entries, got 2");
  CHECK(parse_message(head + R"("maps": [[[[1], ["x"]], [[0], [1]]]]})") == "maps[0][0][1][0]: expected an integer");
  CHECK(parse_message(head + R"("maps": []})") == "maps: expected 1 levels");
  CHECK(parse_message(R"({"type": "beilinson", "p": 6, "n": 2, "r": 1, "dims": [0, 0], "maps": [[[]]]})") ==
        "p: modulus 6 is not prime");
  CHECK(parse_message(R"({"type": "er-module", "p": 5})") == "type: expected \"beilinson\"");
  CHECK(parse_message(R"({"type": "beilinson", "p": 5, "n": 2, "r": 1, "maps": []})") ==
        "document: missing key \"dims\"");
  CHECK(parse_message(R"({"type": "beilinson", "p": 5, "n": 2, "r": 1, "dims": [-1, 0], "maps": []})") ==
        "dims[0]: expected a non-negative integer");
  CHECK(parse_message("[1, 2]") == "document: expected an object");
}

TEST_CASE("entries are reduced modulo p") {
  const auto m = rep_from_json(parse_json(R"({"p": 5, "n": 2, "r": 1, "dims": [1, 1], "maps": [[[[-1]]]]})"));
  CHECK(m.map(0, 0)(0, 0) == 4);
}

TEST_CASE("reports serialize") {
  PrimeField f(5);
  const auto x = x_module(f, 2, 3, ProjPoint(f, {1, 0, 0}), 0, 1);
  const auto rep = to_json(is_ekp_def(x));
  CHECK(rep["property"] == "ekp");
  CHECK(rep["verdict"] == false);
  CHECK(rep["witnesses"][0]["alpha"] == Json::array({1, 0, 0}));
  CHECK(rep["points"] == "F_5, all 31 points of P^2");
  CHECK_FALSE(rep.contains("profile"));

  const auto orbit = to_json(width(x));
  CHECK(orbit["width"] == 2);
  CHECK(orbit["shifts"].size() >= 5);
  CHECK(to_json(width(x, OrbitOptions{1})).at("width").is_null());

  const auto jt = to_json(jt_formula(3, 2, 3));
  CHECK(jt["text"] == "3[2]+3[1]");
  CHECK(jt["counts"] == Json::array({3, 3}));

  const auto e = to_json(end_algebra(forget(m_module(f, 3, 2, 3, 2))));
  CHECK(e["dim"] == 7);
  CHECK(e["regime"] == "exhaustive");
  const auto iso = to_json(is_isomorphic(x, x));
  CHECK(iso["verdict"] == "yes");
  CHECK(iso["witness"].is_array());
  CHECK(to_json(classify(x))["class"] == "regular");
}
