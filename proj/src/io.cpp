#include "treedelta/io.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "treedelta/delta.hpp"

namespace treedelta {

std::vector<AnalyzeRow> to_rows(const Tree& tree,
                                const std::vector<InsetRecord>& records) {
  std::vector<AnalyzeRow> rows;
  rows.reserve(records.size());
  for (const auto& r : records) {
    const Rational ad = adprime(r.dprime, tree.size());
    rows.push_back({tree.label(r.x), tree.label(r.y), r.k, r.dprime, ad.num(),
                    ad.den(), ad.decimal()});
  }
  return rows;
}

void write_analyze_csv(std::ostream& out, const std::vector<AnalyzeRow>& rows) {
  out << kAnalyzeCsvHeader << '\n';
  for (const auto& r : rows) {
    out << r.x << ',' << r.y << ',' << r.k << ',' << r.dprime << ','
        << r.adprime_num << ',' << r.adprime_den << ',' << r.adprime << '\n';
  }
}

void write_analyze_json(std::ostream& out, const AnalyzeMeta& meta,
                        const std::vector<AnalyzeRow>& rows) {
  using Json = nlohmann::ordered_json;
  Json records = Json::array();
  for (const auto& r : rows) {
    records.push_back({{"x", r.x},
                       {"y", r.y},
                       {"k", r.k},
                       {"dprime", r.dprime},
                       {"adprime_num", r.adprime_num},
                       {"adprime_den", r.adprime_den},
                       {"adprime", r.adprime}});
  }
  Json doc;
  doc["meta"] = {{"n", meta.n},
                 {"m", meta.m},
                 {"wiener", meta.wiener},
                 {"avg_distance",
                  meta.n >= 2 ? Rational(meta.wiener, choose2(meta.n)).decimal()
                              : std::string("0")}};
  doc["records"] = std::move(records);
  out << doc.dump(1) << '\n';
}

std::vector<AnalyzeRow> read_analyze_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kAnalyzeCsvHeader) {
    throw InputError("analyze CSV: missing or unexpected header");
  }
  std::vector<AnalyzeRow> rows;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::istringstream fields(line);
    for (std::string cell; std::getline(fields, cell, ',');) {
      cells.push_back(cell);
    }
    if (cells.size() != 7) {
      throw InputError("analyze CSV line " + std::to_string(line_no) +
                       ": expected 7 fields");
    }
    try {
      rows.push_back({cells[0], cells[1], std::stoi(cells[2]),
                      std::stoll(cells[3]), std::stoll(cells[4]),
                      std::stoll(cells[5]), cells[6]});
    } catch (const std::logic_error&) {
      throw InputError("analyze CSV line " + std::to_string(line_no) +
                       ": bad number");
    }
  }
  return rows;
}

std::vector<AnalyzeRow> read_analyze_json(std::istream& in, AnalyzeMeta* meta) {
  std::vector<AnalyzeRow> rows;
  try {
    const auto doc = nlohmann::json::parse(in);
    if (meta) {
      meta->n = doc.at("meta").at("n").get<Count>();
      meta->m = doc.at("meta").at("m").get<Count>();
      meta->wiener = doc.at("meta").at("wiener").get<Count>();
    }
    for (const auto& r : doc.at("records")) {
      rows.push_back({r.at("x").get<std::string>(),
                      r.at("y").get<std::string>(), r.at("k").get<int>(),
                      r.at("dprime").get<Count>(),
                      r.at("adprime_num").get<Count>(),
                      r.at("adprime_den").get<Count>(),
                      r.at("adprime").get<std::string>()});
    }
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("analyze JSON: ") + e.what());
  }
  return rows;
}

}  // namespace treedelta
