#include "greyrank/fixtures.hpp"

#include <array>
#include <string>

#include "greyrank/errors.hpp"

namespace greyrank {

namespace {

// Raw waste-site survey data.  Risk and civic improvement are linguistic
// scores with no agreed numeric encoding, so this fixture deliberately
// fails schema validation; it documents where the interval data came from.
constexpr std::string_view kTable1Raw = R"(label,Cost:undesirable,Lives:undesirable,Risk:undesirable,Civic:desirable
Nome,40,60,Very high,Low
Newark,100,140,Very low,Very high
Rock Springs,60,40,Low,High
Duquesne,60,40,Medium,Medium
Gary,70,80,Low,Very high
Yakima,70,80,High,Medium
Turkey,60,70,High,High
Wells,50,30,Medium,Medium
Anaheim,90,130,Very high,Very low
Epcot,80,120,Very low,Very low
Duckwater,80,70,Medium,Low
Santa Cruz,90,100,Very high,Very low
)";

// The same sites after linguistic encoding and the alpha-cut, every cell a
// closed interval on a 0-1 scale where 1 is the best attainment.  All four
// attributes are therefore desirable here.
constexpr std::string_view kTable2Intervals = R"({
  "provenance": "nuclear waste dump site selection, interval form",
  "attributes": [
    {"name": "Cost", "orientation": "desirable"},
    {"name": "Lives lost", "orientation": "desirable"},
    {"name": "Risk", "orientation": "desirable"},
    {"name": "Civic", "orientation": "desirable"}
  ],
  "alternatives": [
    {"name": "Nome", "cells": [{"interval": [0.80, 1.00]}, {"interval": [0.40, 0.70]}, {"interval": [0.00, 0.10]}, {"interval": [0.10, 0.30]}]},
    {"name": "Newark", "cells": [{"interval": [0.00, 0.05]}, {"interval": [0.00, 0.05]}, {"interval": [0.90, 1.00]}, {"interval": [0.90, 1.00]}]},
    {"name": "Rock Springs", "cells": [{"interval": [0.70, 0.95]}, {"interval": [0.70, 0.90]}, {"interval": [0.70, 0.90]}, {"interval": [0.70, 0.90]}]},
    {"name": "Duquesne", "cells": [{"interval": [0.50, 0.85]}, {"interval": [0.70, 0.90]}, {"interval": [0.40, 0.60]}, {"interval": [0.40, 0.60]}]},
    {"name": "Gary", "cells": [{"interval": [0.40, 0.60]}, {"interval": [0.10, 0.30]}, {"interval": [0.70, 0.90]}, {"interval": [0.90, 1.00]}]},
    {"name": "Yakima", "cells": [{"interval": [0.50, 0.70]}, {"interval": [0.10, 0.30]}, {"interval": [0.10, 0.30]}, {"interval": [0.40, 0.60]}]},
    {"name": "Turkey", "cells": [{"interval": [0.75, 0.90]}, {"interval": [0.20, 0.40]}, {"interval": [0.10, 0.30]}, {"interval": [0.70, 0.90]}]},
    {"name": "Wells", "cells": [{"interval": [0.85, 0.95]}, {"interval": [0.85, 1.00]}, {"interval": [0.40, 0.60]}, {"interval": [0.40, 0.60]}]},
    {"name": "Anaheim", "cells": [{"interval": [0.00, 0.30]}, {"interval": [0.00, 0.10]}, {"interval": [0.00, 0.10]}, {"interval": [0.00, 0.10]}]},
    {"name": "Epcot", "cells": [{"interval": [0.10, 0.40]}, {"interval": [0.00, 0.20]}, {"interval": [0.90, 1.00]}, {"interval": [0.00, 0.10]}]},
    {"name": "Duckwater", "cells": [{"interval": [0.30, 0.50]}, {"interval": [0.20, 0.40]}, {"interval": [0.40, 0.60]}, {"interval": [0.10, 0.30]}]},
    {"name": "Santa Cruz", "cells": [{"interval": [0.10, 0.40]}, {"interval": [0.10, 0.30]}, {"interval": [0.00, 0.10]}, {"interval": [0.00, 0.10]}]}
  ]
}
)";

constexpr std::string_view kTable3Ahp = R"(label,Cost,Lives,Risk,Civic
Cost,1,1/5,1/2,3
Lives,5,1,2,9
Risk,2,1/2,1,6
Civic,1/3,1/9,1/6,1
)";

constexpr std::array<FixtureInfo, 3> kFixtures{{
    {"table1-raw", "", "dataset",
     "raw site survey with linguistic risk/civic cells (fails validation by design)"},
    {"table2-intervals", "nuclear", "dataset",
     "12 waste dump sites x 4 attributes as pre-cut intervals"},
    {"table3-ahp", "", "pairwise",
     "4x4 attribute comparison matrix on the 1-9 judgment scale"},
}};

}  // namespace

std::span<const FixtureInfo> fixtures() { return kFixtures; }

const FixtureInfo* find_fixture(std::string_view id) {
    for (const FixtureInfo& f : kFixtures)
        if (f.id == id || (!f.alias.empty() && f.alias == id)) return &f;
    return nullptr;
}

std::string_view fixture_content(std::string_view id) {
    const FixtureInfo* f = find_fixture(id);
    if (!f) throw IoError("unknown fixture '" + std::string(id) + "'");
    if (f->id == "table1-raw") return kTable1Raw;
    if (f->id == "table2-intervals") return kTable2Intervals;
    return kTable3Ahp;
}

}  // namespace greyrank
