#ifndef AIRPOCKETS_OEIS_FIXTURES_HPP
#define AIRPOCKETS_OEIS_FIXTURES_HPP

// Generated by tools/gen_oeis_fixtures.cpp. Provenance per term:
// 'p' printed in a series expansion and confirmed by the oracle,
// 'o' computed by the oracle only.

#include <cstdint>
#include <string_view>
#include <vector>

namespace airpockets {

struct SequenceFixture {
    std::string_view id;
    std::string_view description;
    int first_index;
    std::vector<std::int64_t> terms;
    std::string_view provenance;
};

inline const std::vector<SequenceFixture>& oeis_fixtures() {
    static const std::vector<SequenceFixture> fixtures = {
        {"A004148", "Dyck paths with air pockets", 2,
         {1, 1, 2, 4, 8, 17, 37, 82, 185, 423, 978, 2283, 5373, 12735, 30372, 72832, 175502},
         "ppppppppppppooooo"},
        {"A051286", "grand paths starting up, ending down", 2,
         {1, 1, 2, 5, 11, 26, 63, 153, 376, 931, 2317, 5794, 14545, 36631, 92512, 234205, 594169},
         "pppppppppoooooooo"},
        {"A110320", "grand paths starting up, ending up", 3,
         {1, 2, 5, 13, 32, 80, 201, 505, 1273, 3217, 8146, 20668, 52531, 133726, 340909, 870213, 2223958},
         "ppppppppppooooooo"},
        {"A110236", "grand paths starting up", 2,
         {1, 2, 4, 10, 24, 58, 143, 354, 881, 2204, 5534, 13940, 35213, 89162, 226238, 575114, 1464382},
         "ppppppppppooooooo"},
        {"A203611", "grand paths starting down", 2,
         {1, 1, 3, 7, 16, 39, 95, 233, 577, 1436, 3590, 9011, 22691, 57299, 145043, 367931, 935078},
         "pppppppppoooooooo"},
        {"A051291", "grand paths", 0,
         {1, 0, 2, 3, 7, 17, 40, 97, 238, 587, 1458, 3640, 9124, 22951, 57904, 146461, 371281},
         "pppppppppppoooooo"},
        {"A062200", "closed paths in [0,2]", 2,
         {1, 1, 1, 3, 2, 6, 6, 11, 16, 22, 37, 49, 80, 113, 172, 257, 377},
         "pppppppppoooooooo"},
        {"A000035", "closed paths in [0,1]", 2,
         {1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1},
         "pppppppppoooooooo"},
        {"A093128", "prefixes staying above y = -2", 0,
         {1, 3, 6, 13, 29, 65, 148, 341, 793, 1860, 4395, 10452, 24999, 60097, 145130, 351916, 856502},
         "pppppppppppoooooo"},
        {"A122514", "closed paths in [-1,1]", 0,
         {1, 0, 2, 1, 3, 4, 5, 10, 11, 21, 27, 43, 64, 92, 144, 205, 316},
         "pppppppppppoooooo"},
        {"A329699", "the set H", 0,
         {1, 0, 1, 1, 2, 3, 6, 10, 20, 36, 72, 136, 273, 532, 1074, 2137, 4342},
         "pppppppppppppoooo"},
    };
    return fixtures;
}

} // namespace airpockets

#endif // AIRPOCKETS_OEIS_FIXTURES_HPP
