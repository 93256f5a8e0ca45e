#pragma once

#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "censtail/censored_sample.hpp"

namespace censtail {

// Reads a (z, delta) dataset.  With a header row the columns are located by
// name (case-insensitive "z" and "delta", any order, extra columns ignored);
// without one the first two columns are taken as (z, delta).  Quoted fields
// and embedded commas are handled.  Throws DataError with the offending line
// number on malformed rows; delta must be 0/1 and z a finite non-negative real.
CensoredSample read_censored_csv(const std::string& path);

// Shortest representation that round-trips the double exactly.
std::string format_double(double v);

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

// RFC-4180-style output: comma separated, one header row, fields quoted when
// они contain commas, quotes or newlines.
void write_csv(const Table& table, std::ostream& out);
std::string to_csv(const Table& table);

// Flat key = value configuration text; '#' or ';' lines are comments.
// Throws std::invalid_argument naming the line on malformed entries.
using ConfigMap = std::map<std::string, std::string, std::less<>>;
ConfigMap read_config_file(const std::string& path);

// Provenance record written next to every output file; replaying one
// reproduces the output byte for byte.
struct RunManifest {
  std::string command;
  ConfigMap config;
  std::uint64_t seed = 0;
  std::string version;
  std::string timestamp;  // UTC, ISO 8601
};

std::string manifest_path_for(const std::string& out_path);  // <out>.manifest.json
void write_manifest(const RunManifest& manifest, const std::string& path);
RunManifest read_manifest(const std::string& path);

// Writes `content` to `path` and the manifest (with the current timestamp)
// next to it.
void write_output_with_manifest(const std::string& path, const std::string& content,
                                RunManifest manifest);

}  // namespace censtail
