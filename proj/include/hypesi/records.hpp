#pragma once

#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "hypesi/connector.hpp"
#include "hypesi/esi.hpp"

namespace hypesi {

/// Tab-separated table: a header line, one line per record, then any number
/// of "summary" lines of key=value fields.
struct RecordTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::vector<std::pair<std::string, std::string>>> summaries;

  void write(std::ostream& os) const;
};

/// 17 significant digits, so the double value survives a round trip.
std::string format_real(const Real& x);
std::string format_real(double x);
/// Inverse of format_real; accepts "inf" and "-inf".
double parse_real(const std::string& s);

struct ParsedRecords {
  std::vector<std::string> header;
  std::vector<std::map<std::string, std::string>> rows;
  std::vector<std::map<std::string, std::string>> summaries;
};

/// Throws std::invalid_argument on a row whose width differs from the header.
ParsedRecords parse_records(const std::string& text);

RecordTable esi_table(const EsiSet& set);
RecordTable connector_table(const ConnectorSet& set);

std::string tag_string(const std::vector<LoopTag>& tags);

}  // namespace hypesi
