#ifndef FINTOP_DOCIO_HPP
#define FINTOP_DOCIO_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fintop/family.hpp"
#include "fintop/game.hpp"
#include "fintop/transfer.hpp"
#include "fintop/witness.hpp"

namespace fintop {

// Line-delimited text documents. Every document starts with
// "fintop <type> v1" and ends with "end". Sets are emitted as sorted point
// index lists; a directive with no indices is the empty set. Documents that
// depend on a space reference it by content hash instead of embedding it
// (except triples, which embed all three of their spaces).

std::uint64_t fnv1a64(std::string_view data);

// 16 hex digits over the canonical "points"/"open" payload. Names and other
// metadata do not affect it.
std::string space_hash(const FiniteSpace& space);

enum class ParseMode { strict, lax };

struct SpaceDoc {
    FiniteSpace space;
    std::optional<std::string> name;
    bool auto_closed = false; // loader completed a generating family
    std::vector<std::string> unknown_lines;
};

std::string save_space(const FiniteSpace& space,
                       const std::optional<std::string>& name = std::nullopt,
                       const std::vector<std::string>& unknown_lines = {});
SpaceDoc load_space(const std::string& text, ParseMode mode = ParseMode::strict,
                    bool auto_close = false);

std::string save_family(const SetFamily& family);
SetFamily load_family(const std::string& text, const FiniteSpace& space,
                      ParseMode mode = ParseMode::strict);

std::string save_fns(const FnsWitness& w);
FnsWitness load_fns(const std::string& text, const FiniteSpace& space,
                    ParseMode mode = ParseMode::strict);

std::string save_fn(const FnWitness& w);
FnWitness load_fn(const std::string& text, const FiniteSpace& space,
                  ParseMode mode = ParseMode::strict);

std::string save_transcript(const GameTranscript& t);
GameTranscript load_transcript(const std::string& text, const FiniteSpace& space,
                               ParseMode mode = ParseMode::strict);

std::string save_triple(const AbsoluteTriple& t);
AbsoluteTriple load_triple(const std::string& text, ParseMode mode = ParseMode::strict);

// Generic key-value report with free-form finding lines; the container for
// sweep results.
struct ReportDoc {
    std::string kind;
    std::vector<std::pair<std::string, std::string>> fields;
    std::vector<std::string> findings;
};

std::string save_report(const ReportDoc& r);
ReportDoc load_report(const std::string& text, ParseMode mode = ParseMode::strict);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

} // namespace fintop

#endif
