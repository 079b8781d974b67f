#include <gtest/gtest.h>

#include <sstream>

#include "craiglat/records.hpp"

using namespace craiglat;

namespace {

RecordTable shipped() { return ingest_file(std::string(CRAIGLAT_DATA_DIR) + "/records.csv"); }

std::string prefix_for(int id) { return std::string(id == 3 || id == 4 ? "possible-T" : "new-T") + std::to_string(id); }

}  // namespace

TEST(Ingest, Rows) {
  std::stringstream s(
      "dim,log2_delta,name,source,kind\n"
      "4096,11527,Mordell-Weil,Table5,record\n"
      "86,34.2075,Shimada,text,record\n"
      "140,114.6656,possible,Table4,hypothetical\n");
  const RecordTable t = ingest(s);
  ASSERT_EQ(t.size(), 3U);
  EXPECT_EQ(t.entries()[0].dim, 4096U);
  EXPECT_EQ(t.entries()[0].value, 11527);
  EXPECT_EQ(t.entries()[1].log2_delta, "34.2075");
  EXPECT_EQ(t.entries()[1].name, "Shimada");
  EXPECT_EQ(t.entries()[2].kind, RecordKind::hypothetical);
  EXPECT_EQ(t.best_record(140), nullptr);

  std::stringstream empty;
  EXPECT_TRUE(ingest(empty).empty());
}

TEST(Ingest, ErrorsNameTheLine) {
  std::stringstream dup("dim,log2_delta,name,source,kind\n86,34.2075,Shimada,text,record\n86,34.3,Shimada,Table2,record\n");
  try {
    ingest(dup);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::parse);
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
  }
  std::stringstream bad("86,abc,Shimada,text,record\n");
  EXPECT_THROW(ingest(bad), Error);
  std::stringstream short_row("86,34.2,Shimada\n");
  EXPECT_THROW(ingest(short_row), Error);
  std::stringstream kind("86,34.2,Shimada,text,rumour\n");
  EXPECT_THROW(ingest(kind), Error);
}

TEST(Compare, Examples) {
  const RecordTable t = shipped();
  const Comparison a = compare(t, 4096, parse_decimal("11529"));
  EXPECT_EQ(a.verdict, Verdict::beats);
  EXPECT_EQ(a.margin, "2.0000");
  EXPECT_EQ(a.record->name, "Mordell-Weil");

  const Comparison b = compare(t, 104, mordell_weil_density(53));
  EXPECT_EQ(b.record->name, "Mordell-Weil");
  const Comparison self = compare(t, 104, parse_decimal("67.0168"));
  EXPECT_EQ(self.verdict, Verdict::ties);

  const Comparison c = compare(t, 96, parse_decimal("47.9003"));
  EXPECT_EQ(c.verdict, Verdict::below);
  EXPECT_EQ(c.record->log2_delta, "52.078");

  try {
    compare(t, 5, parse_decimal("1"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::lookup);
  }
}

TEST(Compare, VerdictStableAcrossPrecision) {
  const RecordTable t = shipped();
  const LogDensity d = center_density_lb({96, 4, 97}, 23);
  for (int digits = 4; digits <= 12; ++digits) EXPECT_EQ(compare(t, 96, d, digits).verdict, Verdict::below);
  const LogDensity e = center_density_lb({128, 4, 131}, 59);
  for (int digits = 4; digits <= 12; ++digits) EXPECT_EQ(compare(t, 128, e, digits).verdict, Verdict::beats);
}

TEST(Coverage, EveryTableRowAppearsExactlyOnce) {
  const RecordTable t = shipped();
  for (int id = 1; id <= 10; ++id) {
    const std::string prefix = prefix_for(id);
    std::size_t tagged = 0;
    for (const auto& e : t.entries())
      if (e.name.rfind(prefix, 0) == 0 && (e.name.size() == prefix.size() || e.name[prefix.size()] == ' ')) ++tagged;
    const auto rows = paper_rows(id);
    EXPECT_EQ(tagged, rows.size()) << id;
    for (const auto& r : rows) {
      int hits = 0;
      for (const auto& e : t.entries())
        if (e.dim == r.dim && e.log2_delta == r.value && e.name.rfind(prefix, 0) == 0) ++hits;
      EXPECT_EQ(hits, 1) << "table " << id << " dim " << r.dim << " value " << r.value;
    }
  }
}

TEST(Tables, FourUsesNextPrimeExceptRow140) {
  for (const auto& r : detail::table4_rows()) {
    if (r.n == 140) {
      EXPECT_EQ(r.l, 151U);
    } else {
      EXPECT_EQ(r.l, next_prime(r.n + 1)) << r.n;
    }
  }
}

TEST(Tables, TwoRowsAreValidLifts) {
  for (const auto& r : detail::table2_rows()) {
    EXPECT_NO_THROW(validate_prime({r.n, r.m, r.l})) << r.n;
    EXPECT_GE(r.d, 8 * r.m) << r.n;
  }
}

TEST(EmitTable, TableOneGainIsExactlyThree) {
  const TableReport rep = emit_table(1, {}, BigRational(1, 10));
  ASSERT_EQ(rep.rows.size(), 4U);
  for (const auto& row : rep.rows) EXPECT_NE(row.note.find("gain 3.0000"), std::string::npos) << row.dim;
  EXPECT_TRUE(rep.rows[0].agrees);
}

TEST(EmitTable, TableTwoExamples) {
  const TableReport rep = emit_table(2);
  ASSERT_EQ(rep.rows.size(), 15U);
  const auto find = [&](std::uint64_t dim) {
    for (const auto& r : rep.rows)
      if (r.dim == dim) return r;
    throw std::runtime_error("missing row");
  };
  EXPECT_NEAR(std::stod(find(360).computed.rendered), 443.03, 0.01);
  EXPECT_TRUE(find(360).agrees);
  const ReportRow r120 = find(120);
  EXPECT_NEAR(std::stod(r120.computed.rendered), 75.22, 0.01);
  EXPECT_FALSE(r120.agrees);
  bool listed = false;
  for (const ReportRow* r : rep.ledger()) listed = listed || r->dim == 120;
  EXPECT_TRUE(listed);
}

TEST(EmitTable, DeterministicAndBothFormats) {
  const CodeTable codes = load_code_table(std::string(CRAIGLAT_DATA_DIR) + "/codes.csv");
  std::stringstream a, b, c;
  write_text(a, emit_table(4, codes));
  write_text(b, emit_table(4, codes));
  EXPECT_EQ(a.str(), b.str());
  EXPECT_NE(a.str().find("DIFF"), std::string::npos);
  write_csv(c, emit_table(3, codes));
  std::string header;
  std::getline(c, header);
  EXPECT_NE(header.find("dim"), std::string::npos);
  std::size_t lines = 0;
  for (std::string line; std::getline(c, line);) lines += line.empty() ? 0 : 1;
  EXPECT_EQ(lines, 7U);
  EXPECT_THROW(emit_table(11), Error);
}
