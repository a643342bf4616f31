#pragma once

#include <cstddef>
#include <cstdint>

namespace logitscope::detail {

struct CodepointRange {
    std::uint32_t first;
    std::uint32_t last;  // inclusive
};

extern const CodepointRange kLetterRanges[];
extern const std::size_t kLetterRangeCount;
extern const CodepointRange kNumberRanges[];
extern const std::size_t kNumberRangeCount;

bool is_letter(std::uint32_t cp);
bool is_number(std::uint32_t cp);
bool is_whitespace(std::uint32_t cp);

}  // namespace logitscope::detail
