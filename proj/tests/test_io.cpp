#include <doctest.h>

#include <cstdio>
#include <sstream>

#include "nci/io.hpp"
#include "test_support.hpp"

using namespace nci;

TEST_SUITE_BEGIN("io");

TEST_CASE("number formatting is six significant digits") {
  CHECK(io::format_number(0.123456789) == "0.123457");
  CHECK(io::format_number(0.5144382431) == "0.514438");
  CHECK(io::format_number(1.0) == "1");
  CHECK(io::format_number(1234567.0) == "1.23457e+06");
  CHECK(io::format_number(0.0000123456789) == "1.23457e-05");
}

TEST_CASE("weights file parsing, canonical order, renormalization") {
  const std::string path = testsup::write_temp_file(
      "w_ok.csv", "node,weight\nB,0.4999995\nA,0.5\n");
  const io::WeightsFile wf = io::read_weights(path);
  REQUIRE(wf.labels.size() == 2);
  CHECK(wf.labels[0] == "A");  // sorted labels
  CHECK(wf.labels[1] == "B");
  CHECK(wf.weights[0] == doctest::Approx(0.5).epsilon(1e-6));
  CHECK(wf.raw_sum == doctest::Approx(0.9999995));
  double sum = 0.0;
  for (double v : wf.weights.values()) sum += v;
  CHECK(sum == doctest::Approx(1.0).epsilon(1e-14));
  std::remove(path.c_str());
}

TEST_CASE("weights file rejects negatives with the line number") {
  const std::string path = testsup::write_temp_file(
      "w_neg.csv", "node,weight\nA,0.5\nB,-0.1\nC,0.6\n");
  try {
    io::read_weights(path);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(std::string(e.what()).find("'B'") != std::string::npos);
  }
  std::remove(path.c_str());
}

TEST_CASE("weights file rejects a materially unnormalized sum") {
  const std::string path =
      testsup::write_temp_file("w_sum.csv", "node,weight\nA,0.5\nB,0.4\n");
  CHECK_THROWS_AS(io::read_weights(path), ParseError);
  std::remove(path.c_str());
}

TEST_CASE("weights file rejects duplicates and bad headers") {
  const std::string dup = testsup::write_temp_file(
      "w_dup.csv", "node,weight\nA,0.5\nA,0.5\n");
  CHECK_THROWS_AS(io::read_weights(dup), ParseError);
  std::remove(dup.c_str());

  const std::string bad =
      testsup::write_temp_file("w_hdr.csv", "id,value\nA,1.0\n");
  CHECK_THROWS_AS(io::read_weights(bad), ParseError);
  std::remove(bad.c_str());
}

TEST_CASE("edge list round trip") {
  CounterRng rng(91);
  std::vector<std::string> labels;
  for (int i = 0; i < 9; ++i) labels.push_back("n" + std::to_string(i));
  for (int rep = 0; rep < 20; ++rep) {
    const BinaryGraph g = testsup::random_graph(9, 0.4, rng);
    std::ostringstream out;
    io::write_edge_list(out, g, labels);
    const std::string path = testsup::write_temp_file("rt.csv", out.str());
    const BinaryGraph back = io::to_graph(io::read_edge_list(path), labels);
    CHECK(back == g);
    std::remove(path.c_str());
  }
}

TEST_CASE("edge list with intensities becomes an interaction matrix") {
  const std::string path = testsup::write_temp_file(
      "e_w.csv", "source,target,intensity\na,b,0.5\nb,c,1.5\n");
  const io::EdgeListFile file = io::read_edge_list(path);
  CHECK(file.weighted);
  const InteractionMatrix m = io::to_interaction(file, {"a", "b", "c"});
  CHECK(m.at(0, 1) == 0.5);
  CHECK(m.at(1, 2) == 1.5);
  CHECK(m.at(0, 2) == 0.0);
  std::remove(path.c_str());
}

TEST_CASE("edge list rejects self-loops, duplicates, bad intensity") {
  const std::string loop =
      testsup::write_temp_file("e_loop.csv", "source,target\na,a\n");
  CHECK_THROWS_AS(io::read_edge_list(loop), ParseError);
  std::remove(loop.c_str());

  const std::string dup = testsup::write_temp_file(
      "e_dup.csv", "source,target\na,b\nb,a\n");
  CHECK_THROWS_AS(io::read_edge_list(dup), ParseError);
  std::remove(dup.c_str());

  const std::string neg = testsup::write_temp_file(
      "e_neg.csv", "source,target,intensity\na,b,-1\n");
  CHECK_THROWS_AS(io::read_edge_list(neg), ParseError);
  std::remove(neg.c_str());
}

TEST_CASE("unknown edge labels are listed in the mismatch error") {
  const std::string path = testsup::write_temp_file(
      "e_lbl.csv", "source,target\na,zz\nqq,b\n");
  const io::EdgeListFile file = io::read_edge_list(path);
  try {
    io::to_graph(file, {"a", "b"});
    FAIL("expected LabelMismatch");
  } catch (const LabelMismatch& e) {
    const std::string msg = e.what();
    CHECK(msg.find("'zz'") != std::string::npos);
    CHECK(msg.find("'qq'") != std::string::npos);
  }
  std::remove(path.c_str());
}

TEST_CASE("coefficient matrix parsing") {
  const std::string path = testsup::write_temp_file(
      "c_ok.csv",
      "sector,s1,s2,s3\n"
      "s1,0.0,0.4,0.1\n"
      "s2,0.2,0.0,0.3\n"
      "s3,0.1,0.5,0.0\n");
  const CoefficientMatrix c = io::read_coefficient_matrix(path);
  CHECK(c.size() == 3);
  CHECK(c.at(0, 1) == 0.4);
  CHECK(c.at(1, 0) == 0.2);
  CHECK(c.labels()[2] == "s3");
  std::remove(path.c_str());
}

TEST_CASE("coefficient matrix must be square with matching labels") {
  const std::string rect = testsup::write_temp_file(
      "c_rect.csv", "sector,s1,s2\ns1,0,1\n");
  CHECK_THROWS_AS(io::read_coefficient_matrix(rect), NonSquare);
  std::remove(rect.c_str());

  const std::string mismatch = testsup::write_temp_file(
      "c_mm.csv", "sector,s1,s2\nsX,0,1\ns2,1,0\n");
  CHECK_THROWS_AS(io::read_coefficient_matrix(mismatch), ParseError);
  std::remove(mismatch.c_str());
}

TEST_CASE("panel parsing drops rows with missing values") {
  const std::string path = testsup::write_temp_file(
      "p_na.csv",
      "date,X,Y\n"
      "2024-01-01,1.0,2.0\n"
      "2024-01-02,,2.1\n"
      "2024-01-03,1.2,NA\n"
      "2024-01-04,1.3,2.2\n"
      "2024-01-05,1.4,2.3\n");
  const io::PanelFile pf = io::read_panel(path);
  CHECK(pf.dropped_rows == 2);
  CHECK(pf.panel.rows() == 3);
  CHECK(pf.panel.timestamps()[1] == "2024-01-04");
  std::remove(path.c_str());
}

TEST_CASE("panel parsing enforces increasing dates") {
  const std::string path = testsup::write_temp_file(
      "p_dates.csv",
      "date,X\n2024-01-02,1.0\n2024-01-01,1.1\n");
  CHECK_THROWS_AS(io::read_panel(path), ParseError);
  std::remove(path.c_str());
}

TEST_CASE("report csv carries empty fields for absent variants") {
  IndexReport r;
  r.hhi = 0.25;
  r.gini = 0.5;
  r.density = 0.1;
  r.psi = 0.4;
  std::ostringstream out;
  io::write_report_csv(out, r);
  const std::string text = out.str();
  CHECK(text.find("0.25,0.5,0.1,0.4,,,,,,,\n") != std::string::npos);
}

TEST_SUITE_END();
