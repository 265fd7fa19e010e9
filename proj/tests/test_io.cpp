#include <doctest.h>

#include <algorithm>

#include "lielap/io.hpp"

using namespace lielap;

TEST_CASE("rationals and matrices from JSON") {
    CHECK(rational_from_json(Json("3/6")) == Rational(1, 2));
    CHECK(rational_from_json(Json(4)) == Rational(4));
    CHECK_THROWS_AS(rational_from_json(Json(0.5)), InputError);
    CHECK_THROWS_AS(rational_from_json(Json("x")), InputError);
    const QMatrix m = matrix_from_json(Json::parse(R"([["1","1/2"],["1/2","2"]])"));
    CHECK(m(0, 1) == Rational(1, 2));
    CHECK_THROWS_AS(matrix_from_json(Json::parse(R"([["1"],["1","2"]])")), InputError);
    CHECK(to_json(Rational(-3, 4)) == Json("-3/4"));
}

TEST_CASE("tensor and group input") {
    const SymTensor t = tensor_from_json(Json::parse(R"({"gram": [["2","1"],["1","1"]]})"), 2);
    CHECK(t(0, 1) == Rational(-1));
    CHECK_THROWS_AS(tensor_from_json(Json::parse(R"({"gram": [["1"]], "tensor": [["1"]]})")), InputError);
    CHECK_THROWS_AS(tensor_from_json(Json::parse(R"({"tensor": [["1"]]})"), 3), InputError);
    CHECK_THROWS_AS(tensor_from_json(Json::parse(R"({"gram": [["-1"]]})"), 1), std::domain_error);

    CHECK(group_from_json(Json("so3")) == group_preset("so3"));
    const GroupSpec g = group_from_json(
        Json::parse(R"({"k": 1, "n": 1, "central_generators": [{"signs": [-1], "torus_part": ["1/2"]}], "name": "u2"})"));
    CHECK(g.central_generators() == group_preset("u2").central_generators());
    CHECK_THROWS(group_from_json(Json::parse(R"({"k": 0, "n": 0})")));
    CHECK_THROWS_AS(read_json_file("/nonexistent/file.json"), InputError);
    CHECK(read_json_argument("[[1]]").is_array());
}

TEST_CASE("serialized tables and certificates") {
    const SpectrumTable t = assemble_spectrum(group_preset("su2"), SymTensor::identity(3), Rational(8));
    const Json j = to_json(t);
    CHECK(j.at("entries").size() == 3);
    CHECK(j.at("entries")[2].at("real_multiplicity") == 9);
    CHECK(j.at("entries")[2].at("irreducible") == false);
    CHECK(j.at("cutoff") == "8");
    CHECK(j.contains("convention_note"));
    CHECK(j.at("verdict").at("all_irreducible") == false);
    const std::string csv = spectrum_csv(t);
    CHECK(csv.rfind("eigenvalue_approx,exact_factor,real_multiplicity,contributors,irreducible,violation", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);

    const Certificate c = cert_b(IrrepLabel{{2}, {}}, SymTensor::identity(3), group_preset("su2"));
    const Json cj = to_json(c);
    CHECK(cj.at("kind") == "b");
    CHECK(cj.at("value") == "0");
    CHECK(cj.at("verdict") == "zero");
    CHECK(cj.at("labels")[0] == "2");
}

TEST_CASE("witness reports round-trip their tensor") {
    const WitnessReport w = witness_search(group_preset("su2"), 3, 5, 2);
    const Json j = to_json(w);
    CHECK(j.at("seed") == 2);
    CHECK(tensor_from_json(j, 3) == w.tensor);
}
