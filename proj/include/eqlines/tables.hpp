#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace eqlines {

// Reference data for tests and verification: published lower/upper bounds
// on the maximum number of equiangular lines in small dimensions, and the
// reference table of SDP bound values for 22 <= n <= 139 that table
// verification diffs against.

struct KnownValuesEntry {
    int n = 0;
    std::int64_t lower = 0;
    std::int64_t upper = 0;
    std::vector<int> angle_inverse;  // odd 1/a values attaining the best known sets
};

/// One reference row: per-angle bound values at 1/5 ... 1/15, their max,
/// the Gerzon value, and the 1/a attaining the max. Rows flagged
/// informational carry no improvement over the Gerzon bound.
struct Table3Row {
    int n = 0;
    std::int64_t bound[6] = {0, 0, 0, 0, 0, 0};  // angles 1/5, 1/7, ..., 1/15
    std::int64_t max = 0;
    std::int64_t gerzon = 0;
    int max_angle_inverse = 0;
    bool informational = false;
};

inline constexpr int kTable3AngleInverse[6] = {5, 7, 9, 11, 13, 15};

inline const std::vector<KnownValuesEntry>& known_values_table() {
    static const std::vector<KnownValuesEntry> table = {
        {2, 3, 3, {2}},
        {3, 6, 6, {}},
        {4, 6, 6, {3}},
        {5, 10, 10, {3}},
        {6, 16, 16, {3}},
        {7, 28, 28, {3}},
        {8, 28, 28, {3}},
        {9, 28, 28, {3}},
        {10, 28, 28, {3}},
        {11, 28, 28, {3}},
        {12, 28, 28, {3}},
        {13, 28, 28, {3}},
        {14, 28, 30, {3, 5}},
        {15, 36, 36, {5}},
        {16, 40, 42, {5}},
        {17, 48, 50, {5}},
        {18, 48, 61, {5}},
        {19, 72, 76, {5}},
        {20, 90, 96, {5}},
        {21, 126, 126, {5}},
        {22, 176, 176, {5}},
        {23, 276, 276, {5}},
        {24, 276, 276, {5}},
        {25, 276, 276, {5}},
        {26, 276, 276, {5}},
        {27, 276, 276, {5}},
        {28, 276, 276, {5}},
        {29, 276, 276, {5}},
        {30, 276, 276, {5}},
        {31, 276, 276, {5}},
        {32, 276, 276, {5}},
        {33, 276, 276, {5}},
        {34, 276, 276, {5}},
        {35, 276, 276, {5}},
        {36, 276, 276, {5}},
        {37, 276, 276, {5}},
        {38, 276, 276, {5}},
        {39, 276, 276, {5}},
        {40, 276, 276, {5}},
        {41, 276, 276, {5}},
        {42, 276, 288, {5}},
        {43, 344, 344, {7}},
    };
    return table;
}

/// Best published lower/upper bounds for dimension n, or absent when n is
/// outside the tabulated range.
inline std::optional<KnownValuesEntry> known_values(int n) {
    for (const KnownValuesEntry& e : known_values_table())
        if (e.n == n) return e;
    return std::nullopt;
}

inline const std::vector<Table3Row>& table3_reference() {
    static const std::vector<Table3Row> table = {
        {22, {176, 39, 29, 26, 25, 24}, 176, 253, 5, false},
        {23, {276, 42, 31, 28, 26, 25}, 276, 276, 5, false},
        {24, {276, 46, 33, 29, 27, 26}, 276, 300, 5, false},
        {25, {276, 50, 35, 31, 29, 28}, 276, 325, 5, false},
        {26, {276, 54, 37, 32, 30, 29}, 276, 351, 5, false},
        {27, {276, 58, 40, 34, 31, 30}, 276, 378, 5, false},
        {28, {276, 64, 42, 36, 33, 31}, 276, 406, 5, false},
        {29, {276, 69, 44, 37, 34, 33}, 276, 435, 5, false},
        {30, {276, 75, 47, 39, 36, 34}, 276, 465, 5, false},
        {31, {276, 82, 49, 41, 37, 35}, 276, 496, 5, false},
        {32, {276, 90, 52, 43, 39, 37}, 276, 528, 5, false},
        {33, {276, 99, 55, 45, 40, 38}, 276, 561, 5, false},
        {34, {276, 108, 57, 46, 42, 39}, 276, 595, 5, false},
        {35, {276, 120, 60, 48, 43, 41}, 276, 630, 5, false},
        {36, {276, 132, 64, 50, 45, 42}, 276, 666, 5, false},
        {37, {276, 148, 67, 52, 47, 44}, 276, 703, 5, false},
        {38, {276, 165, 70, 54, 48, 45}, 276, 741, 5, false},
        {39, {276, 187, 74, 57, 50, 46}, 276, 780, 5, false},
        {40, {276, 213, 78, 59, 52, 48}, 276, 820, 5, false},
        {41, {276, 246, 82, 61, 53, 49}, 276, 861, 5, false},
        {42, {276, 288, 86, 63, 55, 51}, 288, 903, 7, false},
        {43, {276, 344, 90, 66, 57, 52}, 344, 946, 7, false},
        {44, {276, 422, 95, 68, 59, 54}, 422, 990, 7, false},
        {45, {276, 540, 100, 71, 60, 56}, 540, 1035, 7, false},
        {46, {276, 736, 105, 73, 62, 57}, 736, 1081, 7, false},
        {47, {276, 1128, 110, 76, 64, 59}, 1128, 1128, 7, false},
        {48, {276, 1128, 116, 78, 66, 60}, 1128, 1176, 7, false},
        {49, {276, 1128, 122, 81, 68, 62}, 1128, 1225, 7, false},
        {50, {276, 1128, 129, 84, 70, 64}, 1128, 1275, 7, false},
        {51, {276, 1128, 136, 87, 72, 65}, 1128, 1326, 7, false},
        {52, {276, 1128, 143, 90, 74, 67}, 1128, 1378, 7, false},
        {53, {276, 1128, 151, 93, 76, 69}, 1128, 1431, 7, false},
        {54, {276, 1128, 160, 96, 78, 70}, 1128, 1485, 7, false},
        {55, {276, 1128, 169, 100, 81, 72}, 1128, 1540, 7, false},
        {56, {276, 1128, 179, 103, 83, 74}, 1128, 1596, 7, false},
        {57, {276, 1128, 190, 106, 85, 76}, 1128, 1653, 7, false},
        {58, {276, 1128, 201, 110, 87, 77}, 1128, 1711, 7, false},
        {59, {276, 1128, 214, 114, 90, 79}, 1128, 1770, 7, false},
        {60, {276, 1128, 228, 118, 92, 81}, 1128, 1830, 7, false},
        {61, {279, 1128, 244, 122, 94, 83}, 1128, 1891, 7, false},
        {62, {290, 1128, 261, 126, 97, 85}, 1128, 1953, 7, false},
        {63, {301, 1128, 280, 130, 99, 87}, 1128, 2016, 7, false},
        {64, {313, 1128, 301, 134, 102, 89}, 1128, 2080, 7, false},
        {65, {326, 1128, 325, 139, 105, 91}, 1128, 2145, 7, false},
        {66, {339, 1128, 352, 144, 107, 92}, 1128, 2211, 7, false},
        {67, {353, 1128, 382, 148, 110, 94}, 1128, 2278, 7, false},
        {68, {367, 1128, 418, 153, 113, 97}, 1128, 2346, 7, false},
        {69, {382, 1128, 460, 159, 115, 99}, 1128, 2415, 7, false},
        {70, {398, 1128, 509, 164, 118, 101}, 1128, 2485, 7, false},
        {71, {416, 1128, 568, 170, 121, 103}, 1128, 2556, 7, false},
        {72, {434, 1128, 640, 176, 124, 105}, 1128, 2628, 7, false},
        {73, {453, 1128, 730, 182, 127, 107}, 1128, 2701, 7, false},
        {74, {473, 1128, 845, 188, 130, 109}, 1128, 2775, 7, false},
        {75, {494, 1128, 1000, 195, 134, 112}, 1128, 2850, 7, false},
        {76, {517, 1128, 1216, 202, 137, 114}, 1216, 2926, 9, false},
        {77, {542, 1128, 1540, 210, 140, 116}, 1540, 3003, 9, false},
        {78, {568, 1128, 2080, 217, 144, 118}, 2080, 3081, 9, false},
        {79, {596, 1128, 3160, 225, 147, 121}, 3160, 3160, 9, false},
        {80, {626, 1128, 3160, 234, 151, 123}, 3160, 3240, 9, false},
        {81, {658, 1128, 3160, 243, 154, 126}, 3160, 3321, 9, false},
        {82, {693, 1128, 3160, 252, 158, 128}, 3160, 3403, 9, false},
        {83, {731, 1128, 3160, 262, 162, 130}, 3160, 3486, 9, false},
        {84, {772, 1128, 3160, 272, 166, 133}, 3160, 3570, 9, false},
        {85, {816, 1128, 3160, 283, 170, 136}, 3160, 3655, 9, false},
        {86, {866, 1128, 3160, 294, 174, 138}, 3160, 3741, 9, false},
        {87, {920, 1128, 3160, 307, 178, 141}, 3160, 3828, 9, false},
        {88, {979, 1128, 3160, 320, 182, 143}, 3160, 3916, 9, false},
        {89, {1046, 1128, 3160, 333, 186, 146}, 3160, 4005, 9, false},
        {90, {1120, 1128, 3160, 348, 191, 149}, 3160, 4095, 9, false},
        {91, {1203, 1128, 3160, 364, 196, 152}, 3160, 4186, 9, false},
        {92, {1298, 1128, 3160, 380, 200, 154}, 3160, 4278, 9, false},
        {93, {1406, 1128, 3160, 398, 205, 157}, 3160, 4371, 9, false},
        {94, {1515, 1128, 3160, 417, 210, 160}, 3160, 4465, 9, false},
        {95, {1556, 1128, 3160, 438, 215, 163}, 3160, 4560, 9, false},
        {96, {1599, 1128, 3160, 460, 220, 166}, 3160, 4656, 9, false},
        {97, {1644, 1128, 3160, 485, 226, 169}, 3160, 4753, 9, false},
        {98, {1691, 1128, 3160, 511, 231, 172}, 3160, 4851, 9, false},
        {99, {1739, 1128, 3160, 540, 237, 176}, 3160, 4950, 9, false},
        {100, {1790, 1128, 3160, 571, 243, 179}, 3160, 5050, 9, false},
        {101, {1842, 1128, 3160, 606, 249, 182}, 3160, 5151, 9, false},
        {102, {1897, 1128, 3160, 644, 255, 185}, 3160, 5253, 9, false},
        {103, {1954, 1128, 3160, 686, 262, 189}, 3160, 5356, 9, false},
        {104, {2014, 1128, 3160, 734, 268, 192}, 3160, 5460, 9, false},
        {105, {2077, 1128, 3160, 787, 275, 196}, 3160, 5565, 9, false},
        {106, {2142, 1128, 3160, 848, 282, 199}, 3160, 5671, 9, false},
        {107, {2211, 1128, 3160, 917, 289, 203}, 3160, 5778, 9, false},
        {108, {2282, 1128, 3160, 997, 297, 206}, 3160, 5886, 9, false},
        {109, {2358, 1128, 3160, 1090, 305, 210}, 3160, 5995, 9, false},
        {110, {2437, 1128, 3160, 1200, 313, 214}, 3160, 6105, 9, false},
        {111, {2521, 1128, 3160, 1332, 321, 218}, 3160, 6216, 9, false},
        {112, {2609, 1128, 3160, 1493, 330, 222}, 3160, 6328, 9, false},
        {113, {2702, 1128, 3160, 1695, 339, 226}, 3160, 6441, 9, false},
        {114, {2800, 1128, 3160, 1954, 348, 230}, 3160, 6555, 9, false},
        {115, {2904, 1128, 3160, 2300, 357, 234}, 3160, 6670, 9, false},
        {116, {3015, 1128, 3160, 2784, 367, 238}, 3160, 6786, 9, false},
        {117, {3132, 1128, 3160, 3510, 378, 242}, 3510, 6903, 11, false},
        {118, {3257, 1128, 3160, 4720, 388, 247}, 4720, 7021, 11, false},
        {119, {3390, 1128, 3160, 7140, 399, 251}, 7140, 7140, 11, false},
        {120, {3532, 1128, 3160, 7140, 411, 256}, 7140, 7260, 11, false},
        {121, {3684, 1128, 3160, 7140, 423, 260}, 7140, 7381, 11, false},
        {122, {3848, 1128, 3160, 7140, 436, 265}, 7140, 7503, 11, false},
        {123, {4024, 1128, 3160, 7140, 449, 270}, 7140, 7626, 11, false},
        {124, {4214, 1128, 3160, 7140, 462, 275}, 7140, 7750, 11, false},
        {125, {4419, 1128, 3160, 7140, 477, 280}, 7140, 7875, 11, false},
        {126, {4643, 1128, 3160, 7140, 492, 285}, 7140, 8001, 11, false},
        {127, {4887, 1128, 3160, 7140, 508, 290}, 7140, 8128, 11, false},
        {128, {5153, 1128, 3160, 7140, 524, 295}, 7140, 8256, 11, false},
        {129, {5447, 1128, 3160, 7140, 541, 301}, 7140, 8385, 11, false},
        {130, {5770, 1128, 3160, 7140, 560, 306}, 7140, 8515, 11, false},
        {131, {6130, 1128, 3160, 7140, 579, 312}, 7140, 8646, 11, false},
        {132, {6531, 1130, 3160, 7140, 599, 317}, 7140, 8778, 11, false},
        {133, {6982, 1158, 3160, 7140, 620, 323}, 7140, 8911, 11, false},
        {134, {7493, 1187, 3160, 7140, 643, 329}, 7493, 9045, 5, false},
        {135, {8075, 1218, 3160, 7140, 667, 336}, 8075, 9180, 5, false},
        {136, {8747, 1249, 3160, 7140, 692, 342}, 8747, 9316, 5, false},
        {137, {9528, 1282, 3160, 7140, 719, 348}, 9528, 9453, 5, true},
        {138, {10450, 1315, 3160, 7140, 747, 355}, 10450, 9591, 5, true},
        {139, {11553, 1350, 3160, 7140, 778, 362}, 11553, 9730, 5, true},
    };
    return table;
}

/// Reference row for dimension n, or absent outside [22, 139].
inline std::optional<Table3Row> table3_row(int n) {
    for (const Table3Row& r : table3_reference())
        if (r.n == n) return r;
    return std::nullopt;
}

}  // namespace eqlines
