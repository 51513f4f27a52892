#ifndef GREYRANK_IO_HPP
#define GREYRANK_IO_HPP

#include <optional>
#include <string>

#include "greyrank/ahp.hpp"
#include "greyrank/dataset.hpp"
#include "greyrank/dea.hpp"
#include "greyrank/lp.hpp"

namespace greyrank {

enum class OutputFormat { table, csv, json };

OutputFormat parse_output_format(const std::string& name);

/// Dataset plus whatever else the source happened to embed.  A report JSON
/// produced by format_report carries its pairwise matrix along, so a prior
/// run's output can be replayed as input without repeating the matrix flag.
struct RunInput {
    Dataset dataset;
    std::optional<PairwiseMatrix> pairwise;
};

/// Sources are embedded fixture ids first, filesystem paths second.
/// Content is sniffed: JSON when the first significant byte is '{' or '[',
/// CSV otherwise.  Unreadable files raise IoError; malformed or
/// schema-violating content raises ValidationError.
Dataset load_dataset(const std::string& source);
RunInput load_run_input(const std::string& source);
PairwiseMatrix load_pairwise(const std::string& source);
LinearProgram load_lp(const std::string& source);

Dataset parse_dataset(const std::string& text, const std::string& origin);
PairwiseMatrix parse_pairwise(const std::string& text, const std::string& origin);

/// Human formats print numbers at 4 decimals; json carries full precision
/// and embeds config, dataset and pairwise matrix so that loading the
/// emitted file and re-running with the same parameters reproduces the
/// output byte for byte.  audit widens the human formats with the
/// intermediate matrices and per-alternative weights; json always has them.
std::string format_report(const GradeReport& report, const Dataset& data,
                          const std::optional<PairwiseMatrix>& pairwise,
                          OutputFormat format, bool audit);
std::string format_coefficients(const CoefficientMatrix& xi, OutputFormat format);
std::string format_priorities(const PairwiseMatrix& b, const PriorityVector& pv,
                              OutputFormat format);
std::string format_lp_solution(const LinearProgram& lp, const LpSolution& sol,
                               OutputFormat format);

}  // namespace greyrank

#endif
