#ifndef ITP_INSTANCE_IO_HPP
#define ITP_INSTANCE_IO_HPP

#include <iosfwd>
#include <string>

#include "itp/instance.hpp"

namespace itp {

enum class FileFormat { CanonicalJson, FlatCsv };

// Guess from extension: ".csv" -> FlatCsv, anything else -> CanonicalJson.
FileFormat format_from_path(const std::string& path);

// Readers throw ParseError on malformed input and ValidationError when the
// parsed instance violates the data-model invariants. read(write(x)) == x.
IntervalTpInstance read_instance(std::istream& in, FileFormat fmt);
IntervalTpInstance read_instance_file(const std::string& path);
IntervalTpInstance read_instance_file(const std::string& path, FileFormat fmt);

void write_instance(const IntervalTpInstance& inst, std::ostream& out, FileFormat fmt);
void write_instance_file(const IntervalTpInstance& inst, const std::string& path);
void write_instance_file(const IntervalTpInstance& inst, const std::string& path, FileFormat fmt);

std::string instance_to_string(const IntervalTpInstance& inst, FileFormat fmt);
IntervalTpInstance instance_from_string(const std::string& text, FileFormat fmt);

} // namespace itp

#endif
