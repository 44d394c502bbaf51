#include "partrep/reference_values.hpp"

namespace partrep::reference {

const std::vector<Table1Entry>& table1() {
    static const std::vector<Table1Entry> rows = {
        {10, {6, 15, 26}},
        {20, {2, 102, 2}},
        {30, {21, 228, 957}},
        {40, {89, 1401, 1078}},
        {50, {78, 1153, 9745}},
    };
    return rows;
}

const std::vector<MkRow>& table2() {
    // d = 0 is encoded as exponent -1.
    static const std::vector<MkRow> rows = {
        {-1, {1, 1, 1, 1, 1, 1, 1, 1, 1}},
        {0, {35, 5, 7, 2, 2, 2, 2, 2, 2}},
        {5, {201, 133, 87, 82, 64, 71, 64, 45, 45}},
        {10, {527, 295, 265, 247, 227, 258, 196, 135, 135}},
        {15, {1100, 705, 482, 454, 445, 388, 387, 279, 269}},
        {20, {2058, 1019, 806, 745, 654, 653, 633, 444, 444}},
        {25, {2595, 1525, 1203, 1052, 971, 978, 890, 663, 662}},
        {30, {3804, 2135, 1636, 1564, 1337, 1244, 1280, 941, 941}},
        {35, {5030, 2815, 2444, 1930, 1886, 1747, 1620, 1239, 1221}},
        {40, {6340, 3714, 2849, 2513, 2366, 2246, 2047, 1565, 1562}},
        {45, {8253, 4424, 3516, 3178, 2866, 2754, 2685, 2170, 2170}},
        {50, {9646, 5479, 4314, 3726, 3537, 3411, 3134, 2556, 2368}},
        {55, {11524, 6808, 5229, 4802, 4169, 3933, 3815, 2909, 2833}},
        {60, {13723, 8088, 6117, 5318, 4854, 4629, 4506, 3501, 3382}},
        {65, {15516, 8924, 6961, 6403, 5676, 5502, 5232, 4129, 3884}},
        {70, {18237, 10252, 8084, 7056, 6628, 6268, 6098, 4665, 4502}},
    };
    return rows;
}

const std::vector<MkRow>& table3() {
    static const std::vector<MkRow> rows = {
        {0, {1, 1, 1, 1, 1, 1, 1, 1, 1}},
        {1, {35, 5, 7, 2, 2, 2, 2, 2, 2}},
        {2, {35, 22, 20, 9, 3, 3, 3, 3, 3}},
        {3, {35, 22, 20, 9, 3, 3, 3, 3, 3}},
        {4, {35, 22, 20, 9, 4, 4, 4, 4, 4}},
        {5, {35, 22, 20, 9, 4, 4, 4, 4, 4}},
        {6, {35, 22, 20, 9, 5, 5, 5, 5, 5}},
    };
    return rows;
}

const std::vector<FigureSeries>& figure1() {
    static const std::vector<FigureSeries> series = {
        {2,
         {35, 35, 87, 143, 148, 201, 280, 312, 473, 483, 527, 775,
          815, 851, 1020, 1100, 1352, 1352, 1505, 1675, 2058, 2084, 2361, 2361,
          2487, 2595, 3101, 3238, 3479, 3517, 3804, 3947, 4047, 4412, 4582, 5030,
          5253, 5479, 5822, 6032, 6340, 6576, 6964, 7210, 7530, 8253, 8253, 8615,
          9021, 9475, 9646, 10013, 10932, 10932, 11477, 11524, 12000, 12623, 12623, 13309,
          13723, 14329, 14352, 14736, 15516, 15516, 16342, 17239, 17239, 17399, 18237}},
        {3,
         {5, 22, 57, 57, 75, 133, 146, 229, 261, 270, 295, 361,
          505, 505, 592, 705, 709, 811, 914, 995, 1019, 1194, 1294, 1294,
          1376, 1525, 1693, 1812, 1848, 2032, 2135, 2364, 2566, 2579, 2661, 2815,
          3035, 3102, 3315, 3616, 3714, 3800, 3851, 4214, 4424, 4424, 4786, 4931,
          4931, 5105, 5479, 5779, 6023, 6093, 6327, 6808, 7005, 7005, 7184, 7440,
          8088, 8102, 8499, 8650, 8650, 8924, 9292, 9413, 9870, 9907, 10252}},
        {4,
         {7, 20, 26, 57, 79, 87, 110, 170, 170, 265, 265, 287,
          420, 420, 463, 482, 571, 627, 649, 773, 806, 938, 952, 1120,
          1174, 1203, 1325, 1470, 1534, 1534, 1636, 1789, 1973, 1978, 2162, 2444,
          2444, 2444, 2582, 2849, 2849, 3001, 3107, 3320, 3387, 3516, 3795, 3879,
          3952, 4250, 4314, 4525, 4595, 4943, 4943, 5229, 5299, 5511, 6078, 6078,
          6117, 6192, 6395, 6619, 6752, 6961, 7248, 8084, 8084, 8084, 8084}},
        {5,
         {2, 10, 22, 32, 82, 82, 87, 135, 170, 200, 247, 277,
          361, 387, 387, 454, 521, 637, 637, 706, 745, 796, 875, 919,
          973, 1052, 1127, 1205, 1269, 1415, 1564, 1613, 1733, 1898, 1898, 1930,
          2121, 2125, 2281, 2466, 2513, 2613, 2807, 2841, 3023, 3178, 3313, 3365,
          3671, 3671, 3726, 3907, 4100, 4159, 4386, 4802, 4802, 4802, 5054, 5155,
          5318, 5776, 5776, 5824, 5982, 6403, 6524, 6896, 6896, 6896, 7056}},
        {6,
         {2, 11, 21, 35, 56, 64, 126, 126, 138, 167, 227, 268,
          369, 369, 390, 445, 454, 495, 588, 588, 654, 745, 823, 831,
          905, 971, 1073, 1191, 1207, 1275, 1337, 1456, 1566, 1644, 1814, 1886,
          1892, 2054, 2058, 2219, 2366, 2397, 2534, 2620, 2744, 2866, 2927, 3177,
          3228, 3380, 3537, 3729, 3815, 3862, 4106, 4169, 4423, 4637, 4653, 4776,
          4854, 5126, 5245, 5322, 5591, 5676, 5865, 6084, 6157, 6369, 6628}},
        {7,
         {2, 14, 15, 27, 59, 71, 95, 146, 146, 183, 258, 258,
          258, 320, 388, 388, 438, 494, 535, 595, 653, 734, 771, 800,
          897, 978, 1045, 1107, 1174, 1242, 1244, 1502, 1608, 1644, 1747, 1747,
          1768, 1918, 1951, 2035, 2246, 2376, 2376, 2565, 2595, 2754, 2825, 2927,
          3086, 3193, 3411, 3411, 3539, 3660, 3761, 3933, 4122, 4147, 4390, 4602,
          4629, 4822, 4882, 5127, 5319, 5502, 5557, 5665, 5842, 6134, 6268}},
        {8,
         {2, 6, 17, 31, 54, 64, 101, 118, 137, 167, 196, 215,
          265, 283, 336, 387, 440, 467, 533, 552, 633, 639, 686, 758,
          854, 890, 931, 1012, 1089, 1259, 1280, 1322, 1379, 1509, 1587, 1620,
          1693, 1776, 1941, 2015, 2047, 2139, 2309, 2388, 2493, 2685, 2854, 2901,
          2929, 3070, 3134, 3320, 3510, 3596, 3609, 3815, 4011, 4121, 4147, 4326,
          4506, 4686, 4844, 4899, 5037, 5232, 5309, 5501, 5682, 5797, 6098}},
        {50,
         {2, 6, 13, 21, 32, 45, 60, 76, 94, 114, 135, 159,
          184, 271, 272, 279, 302, 334, 369, 406, 444, 485, 609, 611,
          626, 663, 710, 760, 927, 928, 941, 980, 1036, 1218, 1221, 1239,
          1288, 1485, 1488, 1509, 1565, 1732, 1744, 1958, 1960, 2170, 2170, 2176,
          2369, 2372, 2556, 2559, 2733, 2737, 2902, 2909, 3214, 3214, 3360, 3362,
          3501, 3636, 3765, 3770, 3894, 4129, 4242, 4352, 4563, 4664, 4665}},
    };
    return series;
}

const std::vector<NdRange>& table4() {
    static const std::vector<NdRange> ranges = {
        {0, 0, 2},           {1, 1, 5},           {2, 6, 6},           {7, 21, 8},
        {22, 89, 11},        {90, 156, 12},       {157, 1500, 14},     {1501, 1582, 15},
        {1583, 2274, 16},    {2275, 2534, 17},    {2535, 72928, 20},   {72929, 84593, 21},
        {84594, 106335, 22}, {106336, 270343, 23},
    };
    return ranges;
}

LogPolyModel published_f50_window12() {
    return {3, {0.748, 1.836, 0.174, 2.018e-13}, 12};
}

LogPolyModel published_f50_window70() {
    return {5, {8.946, 2.260, 0.1118, 1.25e-3, -8.77e-6, 1.91e-8}, 70};
}

const std::vector<std::uint64_t>& missed_up_to_176() {
    static const std::vector<std::uint64_t> values = {1, 2, 37, 64, 121, 136, 139, 156, 165, 166};
    return values;
}

const std::vector<unsigned>& uncovered_below_20() {
    static const std::vector<unsigned> indices = {2, 16, 19};
    return indices;
}

}  // namespace partrep::reference
