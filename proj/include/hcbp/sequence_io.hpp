#pragma once

// Sequence emission in OEIS b-file, CSV and JSON forms.
//
//   bfile  "<index> <value>\n" per line, no header
//   csv    header "n,value", then "<index>,<value>" per line
//   json   [{"n":<index>,"value":<value>},...] on one line

#include <functional>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "hcbp/types.hpp"

namespace hcbp {

enum class SequenceName { f, h, c, s, deficit };
enum class OutputFormat { bfile, csv, json };

std::optional<SequenceName> parse_sequence_name(std::string_view text);
std::optional<OutputFormat> parse_output_format(std::string_view text);

struct SequenceRecord {
    Index index = 0;
    std::string value; // decimal rendering

    friend bool operator==(const SequenceRecord&, const SequenceRecord&) = default;
};

/// Decimal unsigned integer in [0, 2^62]. Throws std::invalid_argument with a
/// message naming `what` otherwise.
Index parse_decimal(std::string_view text, std::string_view what = "value");

/// Smallest index at which the named sequence is defined.
Index first_index(SequenceName name);

/// Value of the named sequence at n, rendered in decimal.
std::string sequence_value(SequenceName name, Index n);

/// Streams records in strictly increasing index order.
class RecordWriter {
public:
    RecordWriter(std::ostream& out, OutputFormat format);
    RecordWriter(const RecordWriter&) = delete;
    RecordWriter& operator=(const RecordWriter&) = delete;
    ~RecordWriter();

    void write(const SequenceRecord& record);
    /// Closes the JSON array; idempotent and also run by the destructor.
    void finish();

private:
    std::ostream& out_;
    OutputFormat format_;
    bool first_ = true;
    bool finished_ = false;
    std::optional<Index> last_index_;
};

/// Emits name over [from, to]. Throws std::invalid_argument on from > to or a
/// range starting before first_index(name).
void write_sequence(std::ostream& out, SequenceName name, Index from, Index to,
                    OutputFormat format);

/// Strict b-file reader: every line must be "<index> <value>" with decimal
/// fields and strictly increasing indices.
std::vector<SequenceRecord> parse_bfile(std::istream& in);

} // namespace hcbp
