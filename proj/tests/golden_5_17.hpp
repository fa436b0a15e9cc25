#pragma once

// Published reference vectors for the (p, q, g) = (5, 17, 3) instance:
// the four sequences, the shared autocorrelation table, and the printed
// crosscorrelation tables for every pair (k, l), k < l. The printed (0, 1)
// table carries one transcription error: shift 60 reads 8 where direct
// computation (and the identical sibling tables) give 18.

#include <array>
#include <cstdint>
#include <string_view>

namespace golden_5_17 {

inline constexpr std::string_view kSequences[4] = {
    "0010221030212112001020223220212311022211211332330020331230202100222302233032212320232",
    "1121332101323223112131330331323022133322322003001131002301313211333013300103323031303",
    "2232003212030330223202001002030133200033033110112202113012020322000120011210030102010",
    "3303110323101001330313112113101200311100100221223313220123131033111231122321101213121",
};

inline constexpr std::array<std::int64_t, 85> kAutoTable = {
    85, 21, 22, 21, 21, 29, 22, 21, 22, 21, 29, 22, 21, 22, 22, 29, 21,
    13, 22, 21, 29, 21, 21, 21, 22, 29, 21, 21, 21, 22, 29, 22, 22, 22,
    13, 29, 21, 21, 22, 22, 29, 22, 22, 22, 22, 29, 22, 22, 21, 21, 29,
    13, 22, 22, 22, 29, 22, 21, 21, 21, 29, 22, 21, 21, 21, 29, 21, 22,
    13, 21, 29, 22, 22, 21, 22, 29, 21, 22, 21, 22, 29, 21, 21, 22, 21
};

struct PrintedCrossTable {
    int k;
    int l;
    std::array<std::int64_t, 85> values;
};

inline constexpr std::array<PrintedCrossTable, 6> kCrossTables = {{
    {0, 1,
     {
         0, 21, 19, 21, 21, 18, 19, 21, 21, 21, 18, 19, 21, 19, 19, 18, 21,
         24, 19, 21, 18, 21, 21, 21, 21, 18, 21, 21, 21, 19, 18, 21, 19, 19,
         24, 18, 21, 21, 19, 19, 18, 19, 19, 21, 21, 18, 21, 21, 21, 21, 18,
         24, 21, 21, 19, 18, 21, 21, 21, 21, 8, 19, 21, 21, 21, 18, 21, 21,
         24, 21, 18, 21, 21, 21, 21, 18, 21, 19, 21, 21, 18, 21, 21, 21, 21
     }},
    {0, 2,
     {
         0, 22, 23, 22, 22, 20, 23, 22, 23, 22, 20, 23, 22, 23, 23, 20, 22,
         24, 23, 22, 20, 22, 22, 22, 23, 20, 22, 22, 22, 23, 20, 23, 23, 23,
         24, 20, 22, 22, 23, 23, 20, 23, 23, 23, 23, 20, 23, 23, 22, 22, 20,
         24, 23, 23, 23, 20, 23, 22, 22, 22, 20, 23, 22, 22, 22, 20, 22, 23,
         24, 22, 20, 23, 23, 22, 23, 20, 22, 23, 22, 23, 20, 22, 22, 23, 22
     }},
    {0, 3,
     {
         0, 21, 21, 21, 21, 18, 21, 21, 19, 21, 18, 21, 21, 21, 21, 18, 21,
         24, 21, 21, 18, 21, 21, 21, 19, 18, 21, 21, 21, 21, 18, 19, 21, 21,
         24, 18, 21, 21, 21, 21, 18, 21, 21, 19, 19, 18, 19, 19, 21, 21, 18,
         24, 19, 19, 21, 18, 19, 21, 21, 21, 18, 21, 21, 21, 21, 18, 21, 19,
         24, 21, 18, 19, 19, 21, 19, 18, 21, 21, 21, 19, 18, 21, 21, 19, 21
     }},
    {1, 2,
     {
         0, 21, 19, 21, 21, 18, 19, 21, 21, 21, 18, 19, 21, 19, 19, 18, 21,
         24, 19, 21, 18, 21, 21, 21, 21, 18, 21, 21, 21, 19, 18, 21, 19, 19,
         24, 18, 21, 21, 19, 19, 18, 19, 19, 21, 21, 18, 21, 21, 21, 21, 18,
         24, 21, 21, 19, 18, 21, 21, 21, 21, 18, 19, 21, 21, 21, 18, 21, 21,
         24, 21, 18, 21, 21, 21, 21, 18, 21, 19, 21, 21, 18, 21, 21, 21, 21
     }},
    {1, 3,
     {
         0, 22, 23, 22, 22, 20, 23, 22, 23, 22, 20, 23, 22, 23, 23, 20, 22,
         24, 23, 22, 20, 22, 22, 22, 23, 20, 22, 22, 22, 23, 20, 23, 23, 23,
         24, 20, 22, 22, 23, 23, 20, 23, 23, 23, 23, 20, 23, 23, 22, 22, 20,
         24, 23, 23, 23, 20, 23, 22, 22, 22, 20, 23, 22, 22, 22, 20, 22, 23,
         24, 22, 20, 23, 23, 22, 23, 20, 22, 23, 22, 23, 20, 22, 22, 23, 22
     }},
    {2, 3,
     {
         0, 21, 19, 21, 21, 18, 19, 21, 21, 21, 18, 19, 21, 19, 19, 18, 21,
         24, 19, 21, 18, 21, 21, 21, 21, 18, 21, 21, 21, 19, 18, 21, 19, 19,
         24, 18, 21, 21, 19, 19, 18, 19, 19, 21, 21, 18, 21, 21, 21, 21, 18,
         24, 21, 21, 19, 18, 21, 21, 21, 21, 18, 19, 21, 21, 21, 18, 21, 21,
         24, 21, 18, 21, 21, 21, 21, 18, 21, 19, 21, 21, 18, 21, 21, 21, 21
     }},
}};

// The single known deviation between the printed tables and direct
// computation.
inline constexpr int kDeviationPairK = 0;
inline constexpr int kDeviationPairL = 1;
inline constexpr int kDeviationShift = 60;
inline constexpr std::int64_t kDeviationPrinted = 8;
inline constexpr std::int64_t kDeviationComputed = 18;

}  // namespace golden_5_17
