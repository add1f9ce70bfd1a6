#include "corpus.hpp"
#include "fobnn/network.hpp"

#include <doctest.h>

using namespace fobnn;
using fobnn::testing::data_path;
using fobnn::testing::read_text;

namespace {

std::string sbml(const std::string& model_body) {
  return R"(<?xml version="1.0"?>
<sbml xmlns="http://www.sbml.org/sbml/level3/version2/core" level="3" version="2"><model id="m">)" +
         model_body + "</model></sbml>";
}

const std::string kOneReaction = R"(
  <listOfSpecies><species id="A"/><species id="B"/></listOfSpecies>
  <listOfParameters><parameter id="k"/></listOfParameters>
  <listOfReactions><reaction id="r">
    <listOfReactants><speciesReference species="A"/></listOfReactants>
    <listOfProducts><speciesReference species="B"/></listOfProducts>
    <kineticLaw><math xmlns="http://www.w3.org/1998/Math/MathML">MATH</math></kineticLaw>
  </reaction></listOfReactions>)";

std::string one_reaction(const std::string& math) {
  std::string body = kOneReaction;
  body.replace(body.find("MATH"), 4, math);
  return sbml(body);
}

std::string error_of(const std::string& xml) {
  try {
    parse_coresbml(xml);
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("native parse of the enzyme network") {
  const ReactionNetwork rn = fobnn::testing::renz();
  CHECK(rn.species == std::vector<std::string>{"S", "E", "C", "P"});
  REQUIRE(rn.reactions.size() == 3);
  CHECK(rn.constants.size() == 3);
  CHECK(rn.reactions[2].product_coefficient("P") == 2);
  CHECK(rn.reactions[0].kinetics.to_string() == "k_on*S*E");
  CHECK(validate(rn).empty());
}

TEST_CASE("native edge cases") {
  const ReactionNetwork empty = parse_native("species:\n");
  CHECK(empty.species.empty());
  CHECK(empty.reactions.empty());

  const ReactionNetwork rn = parse_native("species: A, P\nconst k > 0\nr: A => 2*P @ k*A\n");
  CHECK(rn.reactions[0].products == Pool{{"P", Rational(2)}});

  const ReactionNetwork numeric = parse_native("species: A\nconst k = -2.5\nconst z = 0\nr: A => @ k*A + z\n");
  CHECK(*numeric.constants[0].value == Rational(-5, 2));
  CHECK(numeric.reactions[0].products.empty());
}

TEST_CASE("native round trip") {
  for (const auto& n : fobnn::testing::small_corpus()) {
    CAPTURE(n.name);
    CHECK(parse_native(render_native(n.rn)) == n.rn);
  }
  const ReactionNetwork rn = fobnn::testing::renz();
  CHECK(parse_native(render_native(rn)) == rn);
}

TEST_CASE("native errors carry positions") {
  auto line_of = [](const std::string& text) {
    try {
      parse_native(text);
    } catch (const InputError& e) {
      return e.line();
    }
    return -1;
  };
  CHECK(line_of("species: A\nr: A => Q @ A\n") == 2);
  CHECK(line_of("species: A, A\n") == 1);
  CHECK(line_of("species: A\n\nr: A => @ k*A\n") == 3);
  CHECK(line_of("species: A\nr: A => A\n") == 2);
  CHECK(line_of("species: A\nr: => @ 1\n") == 2);
  CHECK(line_of("species: A\nr: A => @ (A\n") == 2);
  CHECK(line_of("species: A\nr: A => @ f(A)\n") == 2);
  CHECK(line_of("species: A\nr: A => @ A'\n") == 2);
  CHECK(line_of("species: A\nconst k >= 0\n") == 2);
  try {
    parse_native("species: A\nr: A => B @ A\n");
    FAIL("expected an error");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("line 2, column 9") == 0);
  }
}

TEST_CASE("validate reports every violation") {
  ReactionNetwork rn = fobnn::testing::renz();
  CHECK(validate(rn).empty());
  rn.reactions[0].products.emplace_back("Q", Rational(1));
  rn.reactions[1].reactants[0].second = -1;
  const auto diags = validate(rn);
  REQUIRE(diags.size() == 2);
  CHECK(diags[0] == "undeclared species Q");
  CHECK(diags[1].find("negative stoichiometry") != std::string::npos);
}

TEST_CASE("CoreSBML enzyme network equals the native one") {
  CHECK(parse_coresbml(read_text(data_path("renz.xml"))) == fobnn::testing::renz());
}

TEST_CASE("CoreSBML minimal document") {
  const ReactionNetwork rn = parse_coresbml(one_reaction("<apply><times/><ci>k</ci><ci>A</ci></apply>"));
  CHECK(rn.reactions.size() == 1);
  CHECK(validate(rn).empty());
}

TEST_CASE("CoreSBML kinetic laws") {
  auto kin = [](const std::string& math) { return parse_coresbml(one_reaction(math)).reactions[0].kinetics.to_string(); };
  CHECK(kin("<apply><divide/><apply><times/><ci>k</ci><ci>A</ci></apply><apply><plus/><cn>2</cn><ci>A</ci></apply></apply>") ==
        "k*A/(2 + A)");
  CHECK(kin("<apply><minus/><ci>A</ci></apply>") == "-A");
  CHECK(kin("<apply><power/><ci>A</ci><cn type=\"integer\">3</cn></apply>") == "A*A*A");
  CHECK(kin("<cn type=\"e-notation\">2<sep/>-3</cn>") == "0.002");
  CHECK(kin("<cn type=\"rational\">1<sep/>3</cn>") == "1/3");
  CHECK(kin("<cn>-1.5</cn>") == "-1.5");
}

TEST_CASE("CoreSBML local parameters and compartments") {
  std::string body = kOneReaction;
  body.replace(body.find("MATH"), 4, "<apply><times/><ci>cell</ci><ci>k</ci><ci>A</ci></apply>");
  body.replace(body.find("<kineticLaw>"), 12,
               "<kineticLaw><listOfLocalParameters><localParameter id=\"k\" value=\"0.5\"/></listOfLocalParameters>");
  body = "<listOfCompartments><compartment id=\"cell\" size=\"1\"/></listOfCompartments>" + body;
  const ReactionNetwork rn = parse_coresbml(sbml(body));
  CHECK(rn.reactions[0].kinetics.to_string() == "cell*r__k*A");
  CHECK(rn.find_constant("r__k"));
  CHECK(rn.find_constant("cell"));
  CHECK(validate(rn).empty());
}

TEST_CASE("CoreSBML rejections name the construct") {
  CHECK(error_of(sbml(std::string(kOneReaction) + "<listOfEvents><event id=\"e\"/></listOfEvents>")) ==
        "unsupported: event");
  CHECK(error_of(one_reaction("<piecewise><piece><ci>A</ci></piece></piecewise>")) == "unsupported: piecewise");
  CHECK(error_of(one_reaction("<apply><csymbol definitionURL=\"http://www.sbml.org/sbml/symbols/delay\">d</csymbol>"
                              "<ci>A</ci><cn>1</cn></apply>")) == "unsupported: delay");
  CHECK(error_of(one_reaction("<apply><ci>f</ci><ci>A</ci></apply>")) == "unsupported: apply");
  CHECK(error_of(sbml("<listOfRules/>")) == "unsupported: rule");
  CHECK(error_of(sbml("<listOfFunctionDefinitions/>")) == "unsupported: functionDefinition");
  CHECK(error_of(one_reaction("<apply><exp/><ci>A</ci></apply>")) == "unsupported: exp");
  CHECK(error_of(one_reaction("<apply><power/><ci>A</ci><cn>-1</cn></apply>")) == "unsupported: power");
  CHECK(error_of(sbml("<listOfSpecies><species id=\"A\" boundaryCondition=\"true\"/></listOfSpecies>")) ==
        "unsupported: boundaryCondition");
  CHECK(error_of(one_reaction("<apply><times/><ci>q</ci><ci>A</ci></apply>")) == "undeclared symbol 'q'");
  CHECK(error_of("<sbml><model>").find("malformed XML") != std::string::npos);
}
