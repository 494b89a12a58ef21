#include "hcbp/sequence_io.hpp"

#include <charconv>
#include <cstdio>
#include <stdexcept>

#include "hcbp/core_sequences.hpp"
#include "hcbp/partitions.hpp"

namespace hcbp {

namespace {

bool all_digits(std::string_view text)
{
    if (text.empty()) {
        return false;
    }
    for (const char ch : text) {
        if (ch < '0' || ch > '9') {
            return false;
        }
    }
    return true;
}

std::string render_deficit(Index n)
{
    // Nine decimals stay inside the 32 fractional bits of the fixed-point lg.
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.9f", deficit(n).value());
    return buffer;
}

} // namespace

std::optional<SequenceName> parse_sequence_name(std::string_view text)
{
    if (text == "f") return SequenceName::f;
    if (text == "h") return SequenceName::h;
    if (text == "c") return SequenceName::c;
    if (text == "s") return SequenceName::s;
    if (text == "deficit") return SequenceName::deficit;
    return std::nullopt;
}

std::optional<OutputFormat> parse_output_format(std::string_view text)
{
    if (text == "bfile") return OutputFormat::bfile;
    if (text == "csv") return OutputFormat::csv;
    if (text == "json") return OutputFormat::json;
    return std::nullopt;
}

Index parse_decimal(std::string_view text, std::string_view what)
{
    if (!all_digits(text)) {
        throw std::invalid_argument(std::string(what) + ": expected a decimal unsigned integer, got '" +
                                    std::string(text) + "'");
    }
    Index value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec == std::errc::result_out_of_range || value > kMaxIndex) {
        throw std::invalid_argument(std::string(what) + ": " + std::string(text) +
                                    " exceeds the supported maximum 2^62");
    }
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw std::invalid_argument(std::string(what) + ": cannot parse '" + std::string(text) + "'");
    }
    return value;
}

Index first_index(SequenceName name)
{
    switch (name) {
    case SequenceName::f:
    case SequenceName::deficit:
        return 1;
    case SequenceName::h:
    case SequenceName::c:
    case SequenceName::s:
        return 0;
    }
    return 0;
}

std::string sequence_value(SequenceName name, Index n)
{
    switch (name) {
    case SequenceName::f:
        return to_string(f_digit(n));
    case SequenceName::h:
        return std::to_string(h_reflect(n));
    case SequenceName::c:
        return std::to_string(c_reflect(n));
    case SequenceName::s:
        return std::to_string(digit_sum(n));
    case SequenceName::deficit:
        return render_deficit(n);
    }
    throw std::logic_error("sequence_value: unknown sequence");
}

RecordWriter::RecordWriter(std::ostream& out, OutputFormat format) : out_(out), format_(format)
{
    if (format_ == OutputFormat::csv) {
        out_ << "n,value\n";
    } else if (format_ == OutputFormat::json) {
        out_ << '[';
    }
}

RecordWriter::~RecordWriter()
{
    try {
        finish();
    } catch (...) {
    }
}

void RecordWriter::write(const SequenceRecord& record)
{
    if (finished_) {
        throw std::logic_error("RecordWriter: write after finish");
    }
    if (last_index_ && record.index <= *last_index_) {
        throw std::invalid_argument("RecordWriter: indices must be strictly increasing");
    }
    last_index_ = record.index;
    switch (format_) {
    case OutputFormat::bfile:
        out_ << record.index << ' ' << record.value << '\n';
        break;
    case OutputFormat::csv:
        out_ << record.index << ',' << record.value << '\n';
        break;
    case OutputFormat::json:
        out_ << (first_ ? "" : ",") << "{\"n\":" << record.index << ",\"value\":" << record.value
             << '}';
        break;
    }
    first_ = false;
}

void RecordWriter::finish()
{
    if (finished_) {
        return;
    }
    finished_ = true;
    if (format_ == OutputFormat::json) {
        out_ << "]\n";
    }
    out_.flush();
}

void write_sequence(std::ostream& out, SequenceName name, Index from, Index to, OutputFormat format)
{
    if (from > to) {
        throw std::invalid_argument("range: from (" + std::to_string(from) + ") exceeds to (" +
                                    std::to_string(to) + ")");
    }
    if (from < first_index(name)) {
        throw std::invalid_argument("range: sequence starts at index " +
                                    std::to_string(first_index(name)));
    }
    if (to > kMaxIndex) {
        throw std::invalid_argument("range: upper bound exceeds 2^62");
    }
    RecordWriter writer(out, format);
    for (Index n = from;; ++n) {
        writer.write(SequenceRecord{n, sequence_value(name, n)});
        if (n == to) {
            break;
        }
    }
    writer.finish();
}

std::vector<SequenceRecord> parse_bfile(std::istream& in)
{
    std::vector<SequenceRecord> records;
    std::string line;
    std::size_t line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        const auto space = line.find(' ');
        const auto where = " on b-file line " + std::to_string(line_number);
        if (space == std::string::npos) {
            throw std::invalid_argument("missing separator" + where);
        }
        const std::string_view index_text(line.data(), space);
        const std::string_view value_text(line.data() + space + 1, line.size() - space - 1);
        std::string_view digits = value_text;
        if (!digits.empty() && digits.front() == '-') {
            digits.remove_prefix(1);
        }
        if (!all_digits(index_text) || digits.empty()) {
            throw std::invalid_argument("malformed record" + where);
        }
        for (const char ch : digits) {
            if ((ch < '0' || ch > '9') && ch != '.') {
                throw std::invalid_argument("malformed value" + where);
            }
        }
        SequenceRecord record{parse_decimal(index_text, "index"), std::string(value_text)};
        if (!records.empty() && record.index <= records.back().index) {
            throw std::invalid_argument("indices not strictly increasing" + where);
        }
        records.push_back(std::move(record));
    }
    return records;
}

} // namespace hcbp
