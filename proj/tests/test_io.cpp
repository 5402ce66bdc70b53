#include <catch2/catch_amalgamated.hpp>

#include "qstab/quiver_io.hpp"
#include "qstab/report_io.hpp"

using namespace qstab;

TEST_CASE("quiver document parsing") {
  std::string text = R"({
    "vertices": ["1", "2"],
    "arrows": [["1", "2"], ["1", "2"]],
    "vectors": {"thin": [1, 1]},
    "framings": {"w": [0, 1]}
  })";
  QuiverDocument doc = QuiverDocument::parse(text);
  Quiver q = doc.to_quiver();
  CHECK(q.n_vertices() == 2);
  CHECK(q.arrows(0, 1) == 2);
  CHECK(q.arrows(1, 0) == 0);
  CHECK(doc.vectors.at("thin") == DimVector{1, 1});
  CHECK(doc.framings.at("w") == DimVector{0, 1});

  std::string adj = R"({"vertices": ["a", "b"], "adjacency": [[0, 2], [2, 0]]})";
  Quiver s = QuiverDocument::parse(adj).to_quiver();
  CHECK(s.arrows(0, 1) == 2);
  CHECK(s.arrows(1, 0) == 2);
  CHECK(s.labels()[0] == "a");
}

TEST_CASE("quiver document round trip") {
  Quiver q(3, {"x", "y", "z"});
  q.add_arrows(0, 1, 2);
  q.add_arrows(2, 2, 1);
  QuiverDocument doc = QuiverDocument::from_quiver(q);
  doc.vectors["d"] = {1, 2, 3};
  Quiver back = QuiverDocument::parse(doc.dump()).to_quiver();
  CHECK(back.adjacency() == q.adjacency());
  CHECK(back.labels() == q.labels());
  CHECK(QuiverDocument::parse(doc.dump()).vectors.at("d") == DimVector{1, 2, 3});
}

TEST_CASE("quiver document validation") {
  CHECK_THROWS_AS(QuiverDocument::parse("not json"), validation_error);
  CHECK_THROWS_AS(QuiverDocument::parse(R"({"vertices": []})"), validation_error);
  CHECK_THROWS_AS(QuiverDocument::parse(R"({"vertices": ["a", "a"], "arrows": []})"),
                  validation_error);
  // exactly one of arrows/adjacency
  CHECK_THROWS_AS(QuiverDocument::parse(R"({"vertices": ["a"]})"), validation_error);
  CHECK_THROWS_AS(
      QuiverDocument::parse(R"({"vertices": ["a"], "arrows": [], "adjacency": [[0]]})"),
      validation_error);
  CHECK_THROWS_AS(QuiverDocument::parse(R"({"vertices": ["a"], "arrows": [["a", "b"]]})"),
                  validation_error);
  CHECK_THROWS_AS(QuiverDocument::parse(R"({"vertices": ["a"], "adjacency": [[0, 1]]})"),
                  validation_error);
  CHECK_THROWS_AS(
      QuiverDocument::parse(R"({"vertices": ["a"], "adjacency": [[0]], "vectors": {"d": [1, 2]}})"),
      validation_error);
  CHECK_THROWS_AS(QuiverDocument::parse(R"({"vertices": ["a"], "adjacency": [[-1]]})"),
                  validation_error);
}

TEST_CASE("sweep report serialization") {
  Quiver k3(2);
  k3.add_arrows(0, 1, 3);
  SweepReport rep = kac_sweep(k3, {1, 0}, {1, 1}, BilinearForm::cartan, 0, 3, 1);

  std::string csv = sweep_report_csv(rep);
  CHECK(csv.rfind("n,tau,indivisible,deg,a_0,a_1,certified,verdict\n", 0) == 0);
  // one line per row plus the header
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 5);
  CHECK(csv.find("1,2 1,true,2,1,1") != std::string::npos);

  nlohmann::json j = sweep_report_json(rep);
  CHECK(j["form"] == "cartan");
  CHECK(j["rows"].size() == 4);
  REQUIRE(j["coefficients"].size() == 2);
  // numbers in the JSON agree with the report
  for (std::size_t k = 0; k < rep.rows.size(); ++k) {
    CHECK(j["rows"][k]["n"] == rep.rows[k].n);
    CHECK(j["rows"][k]["deg"] == rep.rows[k].deg);
    for (std::size_t i = 0; i < rep.rows[k].a.size(); ++i)
      CHECK(j["rows"][k]["a"][i] == rep.rows[k].a[i].str());
  }
  for (std::size_t i = 0; i < rep.coefficients.size(); ++i) {
    CHECK(j["coefficients"][i]["stabilized"] == rep.coefficients[i].stabilized);
    CHECK(j["coefficients"][i]["limit"] == rep.coefficients[i].limit_coeff.str());
  }

  std::string text = sweep_report_text(rep);
  CHECK(text.find("sweep d=(1,0) delta=(1,1)") != std::string::npos);
  CHECK(text.find("strict star for this form: holds") != std::string::npos);
}
