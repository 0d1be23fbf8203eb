#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "schur/amplitudes.hpp"
#include "schur/branching.hpp"

namespace schur::cli {

enum ExitCode : int {
    kOk = 0,
    kUsage = 1,
    kValidation = 2,
    kCheckFailed = 3,
};

enum class OutputFormat { text, json };

struct CliConfig {
    int d = 2;
    AmplitudeEngine engine = AmplitudeEngine::louck;
    OutputFormat format = OutputFormat::text;
    std::size_t size_bound = 4096;
};

// Parses a word over the external alphabet of d: "0101" when d = 2,
// otherwise "1,2,3" or, for d <= 9, plain digits "123". Throws FormatError.
Word parse_word(const std::string& text, int d);
std::string format_word(const Word& word, int d);

// Size bound precedence: --size-bound, then SCHUR_SIZE_BOUND, then 4096.
std::size_t resolve_size_bound(std::optional<std::size_t> flag, const char* env);

// args excludes the program name. Reads stdin only for `decode -`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace schur::cli
