#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "support/synthetic.hpp"
#include "swsurg/errors.hpp"
#include "swsurg/manifold_file.hpp"

using namespace swsurg;
using namespace swsurg::testing;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::filesystem::path catalog(const std::string& name) { return std::filesystem::path(SWSURG_CATALOG) / name; }

ManifoldFile x0_file() {
  ManifoldFile f;
  const SyntheticSide side = x0();
  f.manifold = side.x;
  f.surfaces["S"] = side.s;
  return f;
}

}  // namespace

TEST_CASE("catalog files parse and validate") {
  for (const char* name : {"k3.mfd", "x0.mfd", "x0_flat.mfd", "nonprimitive.mfd"}) {
    CAPTURE(name);
    const ManifoldFile f = read_manifold_file(catalog(name));
    CHECK(validate(f.manifold).valid());
  }
  const ManifoldFile k3f = read_manifold_file(catalog("k3.mfd"));
  CHECK(k3f.manifold.lattice.gram() == k3().lattice.gram());
  CHECK(k3f.manifold.chi == 24);
  CHECK(signature(k3f.manifold.lattice).positive == 3);

  const ManifoldFile x0f = read_manifold_file(catalog("x0.mfd"));
  CHECK(x0f.manifold.lattice.gram() == x0().x.lattice.gram());
  REQUIRE(x0f.surfaces.count("S") == 1);
  CHECK(x0f.surfaces.at("S").surface_class == x0().s.surface_class);
  CHECK(*x0f.surfaces.at("S").dual_class == *x0().s.dual_class);
}

TEST_CASE("canonical serialization round-trips catalog bytes") {
  for (const char* name : {"k3.mfd", "x0.mfd", "x0_flat.mfd", "nonprimitive.mfd"}) {
    CAPTURE(name);
    const std::string bytes = slurp(catalog(name));
    const ManifoldFile f = parse_manifold_file(bytes);
    CHECK(serialize(f, Style::Canonical) == bytes);
    const std::string pretty = serialize(f, Style::Pretty);
    CHECK(serialize(parse_manifold_file(pretty), Style::Canonical) == bytes);
  }
}

TEST_CASE("serialization is independent of basic class order") {
  ManifoldFile a = x0_file();
  ManifoldFile b = a;
  std::reverse(b.manifold.basic_classes.begin(), b.manifold.basic_classes.end());
  CHECK(serialize(a, Style::Canonical) == serialize(b, Style::Canonical));
  CHECK(serialize(a, Style::Pretty) == serialize(b, Style::Pretty));
}

TEST_CASE("pretty style keeps scalar arrays on one line") {
  const std::string text = render_json(nlohmann::json::parse(R"({"b":[1,2,3],"a":{"c":[[0,1],[1,0]]}})"), Style::Pretty);
  CHECK(text.find("[1, 2, 3]") != std::string::npos);
  CHECK(text.find("[0, 1]") != std::string::npos);
  CHECK(text.find("\"a\"") < text.find("\"b\""));
  CHECK(text.back() == '\n');
}

TEST_CASE("large integers survive as strings") {
  ManifoldFile f = x0_file();
  const Integer big("123456789012345678901234567890");
  f.manifold.basic_classes[0].sw = big;
  const std::string text = serialize(f, Style::Canonical);
  CHECK(text.find("\"123456789012345678901234567890\"") != std::string::npos);
  const ManifoldFile back = parse_manifold_file(text);
  bool found = false;
  for (const auto& bc : back.manifold.basic_classes) found = found || bc.sw == big;
  CHECK(found);
  CHECK(serialize(back, Style::Canonical) == text);

  CHECK(integer_to_json(Integer("9007199254740991")).is_number());
  CHECK(integer_to_json(Integer("9007199254740992")).is_string());
  CHECK(integer_to_json(Integer("-9007199254740992")).is_string());
}

TEST_CASE("parse errors") {
  SUBCASE("malformed syntax reports a byte offset") {
    try {
      parse_manifold_file("{\"manifold\": ");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.location().find("byte") == 0);
    }
  }
  SUBCASE("schema errors report a JSON pointer") {
    nlohmann::json j = to_json(x0_file());
    j["manifold"].erase("chi");
    try {
      parse_manifold_file(j.dump());
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.location() == "/manifold");
    }
  }
  SUBCASE("oversized JSON numbers are rejected") {
    nlohmann::json j = to_json(x0_file());
    j["manifold"]["basic_classes"][0]["sw"] = 9007199254740993ULL;
    CHECK_THROWS_AS(parse_manifold_file(j.dump()), ParseError);
  }
  SUBCASE("fractional numbers are rejected") {
    nlohmann::json j = to_json(x0_file());
    j["manifold"]["chi"] = 8.5;
    CHECK_THROWS_AS(parse_manifold_file(j.dump()), ParseError);
  }
  SUBCASE("small integers may be written as strings") {
    nlohmann::json j = to_json(x0_file());
    j["manifold"]["chi"] = "8";
    CHECK(parse_manifold_file(j.dump()).manifold.chi == 8);
  }
  SUBCASE("unknown schema version") {
    nlohmann::json j = to_json(x0_file());
    j["schema_version"] = "2";
    CHECK_THROWS_AS(parse_manifold_file(j.dump()), ParseError);
  }
}

TEST_CASE("validation errors on load") {
  nlohmann::json j = to_json(x0_file());
  j["manifold"]["gram"][0][1] = 2;
  try {
    parse_manifold_file(j.dump());
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    REQUIRE_FALSE(e.failures().empty());
    CHECK(e.failures()[0].find("symmetry") != std::string::npos);
  }

  j = to_json(x0_file());
  j["surfaces"]["S"]["dual"] = {0, 0, 0, 0, 1, 0};
  CHECK_THROWS_AS(parse_manifold_file(j.dump()), ValidationError);
}

TEST_CASE("atomic writes and digests") {
  const auto dir = std::filesystem::temp_directory_path() / "swsurg_test_write";
  std::filesystem::create_directories(dir);
  const auto path = dir / "out.mfd";
  write_file_atomically(path, "first\n");
  write_file_atomically(path, "second\n");
  CHECK(slurp(path) == "second\n");
  CHECK_FALSE(std::filesystem::exists(path.string() + ".tmp"));
  std::filesystem::remove_all(dir);

  CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("style from environment") {
  setenv("SWSURG_CANONICAL", "1", 1);
  CHECK(style_from_environment() == Style::Canonical);
  setenv("SWSURG_CANONICAL", "0", 1);
  CHECK(style_from_environment() == Style::Pretty);
  unsetenv("SWSURG_CANONICAL");
  CHECK(style_from_environment() == Style::Pretty);
}
