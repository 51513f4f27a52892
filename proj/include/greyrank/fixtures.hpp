#ifndef GREYRANK_FIXTURES_HPP
#define GREYRANK_FIXTURES_HPP

#include <span>
#include <string_view>

namespace greyrank {

/// Embedded desk-scale inputs.  Content is plain CSV or JSON and flows
/// through the ordinary parsers, so a fixture id can stand in for a path
/// anywhere a dataset or pairwise matrix is loaded.
struct FixtureInfo {
    std::string_view id;
    std::string_view alias;  // empty when none
    std::string_view kind;   // "dataset" or "pairwise"
    std::string_view summary;
};

std::span<const FixtureInfo> fixtures();

/// Matches id or alias; nullptr when unknown.
const FixtureInfo* find_fixture(std::string_view id);

/// Raw fixture text; throws IoError for unknown ids.
std::string_view fixture_content(std::string_view id);

}  // namespace greyrank

#endif
