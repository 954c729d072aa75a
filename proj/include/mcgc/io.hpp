#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "mcgc/sequence.hpp"

namespace mcgc {

/// Header fields of a sequence file, e.g. "# k=9 mode=cyclic m=3".
using Header = std::map<std::string, std::string>;

struct SequenceFile {
  Header header;
  std::vector<ColorSequence> sequences;
};

/// Writes "# k=<k> mode=<mode>" followed by any extra fields, then the
/// sequence as space-separated decimal ids.
void write_sequence(std::ostream& os, const ColorSequence& seq,
                    const std::vector<std::pair<std::string, std::string>>&
                        extra = {});

/// Reads every sequence line. k and mode come from the header when present;
/// otherwise k is the largest id seen and mode defaults to cyclic.
SequenceFile read_sequences(std::istream& is);
SequenceFile read_sequence_file(const std::string& path);

/// Parses "key=value" tokens from a '#' comment line into `out`.
void parse_header_line(const std::string& line, Header& out);

}  // namespace mcgc
