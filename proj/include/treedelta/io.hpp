#ifndef TREEDELTA_IO_HPP_
#define TREEDELTA_IO_HPP_

#include <iosfwd>
#include <string>
#include <vector>

#include "treedelta/sweep.hpp"
#include "treedelta/tree.hpp"
#include "treedelta/types.hpp"

namespace treedelta {

inline constexpr const char* kAnalyzeCsvHeader =
    "x,y,k,dprime,adprime_num,adprime_den,adprime";
inline constexpr const char* kBenchCsvHeader =
    "family,n,m,wiener,basic_ops,ops_per_wiener,wall_ms";

// One analyze row with labels resolved.
struct AnalyzeRow {
  std::string x;
  std::string y;
  int k = 0;
  Count dprime = 0;
  Count adprime_num = 0;
  Count adprime_den = 1;
  std::string adprime;

  bool operator==(const AnalyzeRow&) const = default;
};

struct AnalyzeMeta {
  Count n = 0;
  Count m = 0;
  Count wiener = 0;
};

std::vector<AnalyzeRow> to_rows(const Tree& tree,
                                const std::vector<InsetRecord>& records);

void write_analyze_csv(std::ostream& out, const std::vector<AnalyzeRow>& rows);
void write_analyze_json(std::ostream& out, const AnalyzeMeta& meta,
                        const std::vector<AnalyzeRow>& rows);

// Inverse of the writers. Throws InputError on a malformed file.
std::vector<AnalyzeRow> read_analyze_csv(std::istream& in);
std::vector<AnalyzeRow> read_analyze_json(std::istream& in,
                                          AnalyzeMeta* meta = nullptr);

}  // namespace treedelta

#endif  // TREEDELTA_IO_HPP_
