#pragma once

// Generated by tools/gen_preflop_table.cpp. Do not edit.

#include <array>
#include <cstdint>

namespace pokerprob {

inline constexpr std::uint64_t kPreflopBoards = 2118760;

// Final-category counts (HighCard..StraightFlush) per hole class; see hole_class().
inline constexpr std::array<std::array<std::uint32_t, 9>, 169> kPreflopCategoryCounts = {{
    {{0, 762300, 840456, 249458, 25816, 41562, 181104, 17848, 216}},  // 2c 2d
    {{402930, 947520, 477370, 93236, 106134, 41518, 47124, 2668, 260}},  // 3c 2d
    {{397980, 944512, 477370, 93236, 114092, 41474, 47124, 2668, 304}},  // 4c 2d
    {{393030, 941504, 477370, 93236, 122050, 41430, 47124, 2668, 348}},  // 5c 2d
    {{408870, 959552, 480080, 93808, 84880, 41431, 47124, 2668, 347}},  // 6c 2d
    {{418770, 974592, 482790, 94380, 56658, 41431, 47124, 2668, 347}},  // 7c 2d
    {{413820, 971584, 482790, 94380, 64616, 41431, 47124, 2668, 347}},  // 8c 2d
    {{413820, 971584, 482790, 94380, 64616, 41431, 47124, 2668, 347}},  // 9c 2d
    {{412830, 971584, 482790, 94380, 65606, 41430, 47124, 2668, 348}},  // Tc 2d
    {{417780, 974592, 482790, 94380, 57648, 41474, 47124, 2668, 304}},  // Jc 2d
    {{422730, 977600, 482790, 94380, 49690, 41518, 47124, 2668, 260}},  // Qc 2d
    {{427680, 980608, 482790, 94380, 41732, 41562, 47124, 2668, 216}},  // Kc 2d
    {{417780, 965568, 480080, 93808, 69954, 41562, 47124, 2668, 216}},  // Ac 2d
    {{372405, 899640, 466449, 91443, 99573, 137306, 47124, 2668, 2152}},  // 3c 2c
    {{0, 756360, 838944, 248952, 33774, 41474, 181104, 17848, 304}},  // 3c 3d
    {{383130, 926464, 474660, 92664, 150272, 41430, 47124, 2668, 348}},  // 4c 3d
    {{378180, 923456, 474660, 92664, 158230, 41386, 47124, 2668, 392}},  // 5c 3d
    {{394020, 941504, 477370, 93236, 121060, 41387, 47124, 2668, 391}},  // 6c 3d
    {{403920, 956544, 480080, 93808, 92838, 41387, 47124, 2668, 391}},  // 7c 3d
    {{413820, 971584, 482790, 94380, 64616, 41387, 47124, 2668, 391}},  // 8c 3d
    {{408870, 968576, 482790, 94380, 72574, 41387, 47124, 2668, 391}},  // 9c 3d
    {{407880, 968576, 482790, 94380, 73564, 41386, 47124, 2668, 392}},  // Tc 3d
    {{412830, 971584, 482790, 94380, 65606, 41430, 47124, 2668, 348}},  // Jc 3d
    {{417780, 974592, 482790, 94380, 57648, 41474, 47124, 2668, 304}},  // Qc 3d
    {{422730, 977600, 482790, 94380, 49690, 41518, 47124, 2668, 260}},  // Kc 3d
    {{412830, 962560, 480080, 93808, 77912, 41518, 47124, 2668, 260}},  // Ac 3d
    {{367830, 896784, 466449, 91443, 107004, 137262, 47124, 2668, 2196}},  // 4c 2c
    {{354105, 879648, 463806, 90882, 141069, 136272, 47124, 2668, 3186}},  // 4c 3c
    {{0, 750420, 837432, 248446, 41732, 41386, 181104, 17848, 392}},  // 4c 4d
    {{363330, 905408, 471950, 92092, 194410, 41342, 47124, 2668, 436}},  // 5c 4d
    {{379170, 923456, 474660, 92664, 157240, 41343, 47124, 2668, 435}},  // 6c 4d
    {{389070, 938496, 477370, 93236, 129018, 41343, 47124, 2668, 435}},  // 7c 4d
    {{398970, 953536, 480080, 93808, 100796, 41343, 47124, 2668, 435}},  // 8c 4d
    {{408870, 968576, 482790, 94380, 72574, 41343, 47124, 2668, 435}},  // 9c 4d
    {{402930, 965568, 482790, 94380, 81522, 41342, 47124, 2668, 436}},  // Tc 4d
    {{407880, 968576, 482790, 94380, 73564, 41386, 47124, 2668, 392}},  // Jc 4d
    {{412830, 971584, 482790, 94380, 65606, 41430, 47124, 2668, 348}},  // Qc 4d
    {{417780, 974592, 482790, 94380, 57648, 41474, 47124, 2668, 304}},  // Kc 4d
    {{407880, 959552, 480080, 93808, 85870, 41474, 47124, 2668, 304}},  // Ac 4d
    {{363255, 893928, 466449, 91443, 114435, 137218, 47124, 2668, 2240}},  // 5c 2c
    {{349530, 876792, 463806, 90882, 148500, 136228, 47124, 2668, 3230}},  // 5c 3c
    {{335805, 859656, 461163, 90321, 182565, 135238, 47124, 2668, 4220}},  // 5c 4c
    {{0, 744480, 835920, 247940, 49690, 41298, 181104, 17848, 480}},  // 5c 5d
    {{364320, 905408, 471950, 92092, 193420, 41299, 47124, 2668, 479}},  // 6c 5d
    {{374220, 920448, 474660, 92664, 165198, 41299, 47124, 2668, 479}},  // 7c 5d
    {{384120, 935488, 477370, 93236, 136976, 41299, 47124, 2668, 479}},  // 8c 5d
    {{394020, 950528, 480080, 93808, 108754, 41299, 47124, 2668, 479}},  // 9c 5d
    {{402930, 965568, 482790, 94380, 81522, 41298, 47124, 2668, 480}},  // Tc 5d
    {{402930, 965568, 482790, 94380, 81522, 41342, 47124, 2668, 436}},  // Jc 5d
    {{407880, 968576, 482790, 94380, 73564, 41386, 47124, 2668, 392}},  // Qc 5d
    {{412830, 971584, 482790, 94380, 65606, 41430, 47124, 2668, 348}},  // Kc 5d
    {{402930, 956544, 480080, 93808, 93828, 41430, 47124, 2668, 348}},  // Ac 5d
    {{377895, 911064, 469092, 92004, 79455, 138209, 47124, 2668, 1249}},  // 6c 2c
    {{364170, 893928, 466449, 91443, 113520, 137219, 47124, 2668, 2239}},  // 6c 3c
    {{350445, 876792, 463806, 90882, 147585, 136229, 47124, 2668, 3229}},  // 6c 4c
    {{336720, 859656, 461163, 90321, 181650, 135239, 47124, 2668, 4219}},  // 6c 5c
    {{0, 745470, 835920, 247940, 48700, 41300, 181104, 17848, 478}},  // 6c 6d
    {{365310, 905408, 471950, 92092, 192430, 41300, 47124, 2668, 478}},  // 7c 6d
    {{375210, 920448, 474660, 92664, 164208, 41300, 47124, 2668, 478}},  // 8c 6d
    {{385110, 935488, 477370, 93236, 135986, 41300, 47124, 2668, 478}},  // 9c 6d
    {{394020, 950528, 480080, 93808, 108754, 41299, 47124, 2668, 479}},  // Tc 6d
    {{408870, 968576, 482790, 94380, 72574, 41343, 47124, 2668, 435}},  // Jc 6d
    {{408870, 968576, 482790, 94380, 72574, 41387, 47124, 2668, 391}},  // Qc 6d
    {{413820, 971584, 482790, 94380, 64616, 41431, 47124, 2668, 347}},  // Kc 6d
    {{418770, 974592, 482790, 94380, 56658, 41431, 47124, 2668, 347}},  // Ac 6d
    {{387045, 925344, 471735, 92565, 52821, 139155, 47124, 2668, 303}},  // 7c 2c
    {{373320, 908208, 469092, 92004, 86886, 138165, 47124, 2668, 1293}},  // 7c 3c
    {{359595, 891072, 466449, 91443, 120951, 137175, 47124, 2668, 2283}},  // 7c 4c
    {{345870, 873936, 463806, 90882, 155016, 136185, 47124, 2668, 3273}},  // 7c 5c
    {{337635, 859656, 461163, 90321, 180735, 135240, 47124, 2668, 4218}},  // 7c 6c
    {{0, 745470, 835920, 247940, 48700, 41300, 181104, 17848, 478}},  // 7c 7d
    {{365310, 905408, 471950, 92092, 192430, 41300, 47124, 2668, 478}},  // 8c 7d
    {{375210, 920448, 474660, 92664, 164208, 41300, 47124, 2668, 478}},  // 9c 7d
    {{384120, 935488, 477370, 93236, 136976, 41299, 47124, 2668, 479}},  // Tc 7d
    {{398970, 953536, 480080, 93808, 100796, 41343, 47124, 2668, 435}},  // Jc 7d
    {{413820, 971584, 482790, 94380, 64616, 41387, 47124, 2668, 391}},  // Qc 7d
    {{413820, 971584, 482790, 94380, 64616, 41431, 47124, 2668, 347}},  // Kc 7d
    {{413820, 971584, 482790, 94380, 64616, 41431, 47124, 2668, 347}},  // Ac 7d
    {{382470, 922488, 471735, 92565, 60252, 139111, 47124, 2668, 347}},  // 8c 2c
    {{382470, 922488, 471735, 92565, 60252, 139111, 47124, 2668, 347}},  // 8c 3c
    {{368745, 905352, 469092, 92004, 94317, 138121, 47124, 2668, 1337}},  // 8c 4c
    {{355020, 888216, 466449, 91443, 128382, 137131, 47124, 2668, 2327}},  // 8c 5c
    {{346785, 873936, 463806, 90882, 154101, 136186, 47124, 2668, 3272}},  // 8c 6c
    {{337635, 859656, 461163, 90321, 180735, 135240, 47124, 2668, 4218}},  // 8c 7c
    {{0, 745470, 835920, 247940, 48700, 41300, 181104, 17848, 478}},  // 8c 8d
    {{365310, 905408, 471950, 92092, 192430, 41300, 47124, 2668, 478}},  // 9c 8d
    {{374220, 920448, 474660, 92664, 165198, 41299, 47124, 2668, 479}},  // Tc 8d
    {{389070, 938496, 477370, 93236, 129018, 41343, 47124, 2668, 435}},  // Jc 8d
    {{403920, 956544, 480080, 93808, 92838, 41387, 47124, 2668, 391}},  // Qc 8d
    {{418770, 974592, 482790, 94380, 56658, 41431, 47124, 2668, 347}},  // Kc 8d
    {{413820, 971584, 482790, 94380, 64616, 41431, 47124, 2668, 347}},  // Ac 8d
    {{382470, 922488, 471735, 92565, 60252, 139111, 47124, 2668, 347}},  // 9c 2c
    {{377895, 919632, 471735, 92565, 67683, 139067, 47124, 2668, 391}},  // 9c 3c
    {{377895, 919632, 471735, 92565, 67683, 139067, 47124, 2668, 391}},  // 9c 4c
    {{364170, 902496, 469092, 92004, 101748, 138077, 47124, 2668, 1381}},  // 9c 5c
    {{355935, 888216, 466449, 91443, 127467, 137132, 47124, 2668, 2326}},  // 9c 6c
    {{346785, 873936, 463806, 90882, 154101, 136186, 47124, 2668, 3272}},  // 9c 7c
    {{337635, 859656, 461163, 90321, 180735, 135240, 47124, 2668, 4218}},  // 9c 8c
    {{0, 745470, 835920, 247940, 48700, 41300, 181104, 17848, 478}},  // 9c 9d
    {{364320, 905408, 471950, 92092, 193420, 41299, 47124, 2668, 479}},  // Tc 9d
    {{379170, 923456, 474660, 92664, 157240, 41343, 47124, 2668, 435}},  // Jc 9d
    {{394020, 941504, 477370, 93236, 121060, 41387, 47124, 2668, 391}},  // Qc 9d
    {{408870, 959552, 480080, 93808, 84880, 41431, 47124, 2668, 347}},  // Kc 9d
    {{418770, 974592, 482790, 94380, 56658, 41431, 47124, 2668, 347}},  // Ac 9d
    {{381555, 922488, 471735, 92565, 61167, 139110, 47124, 2668, 348}},  // Tc 2c
    {{376980, 919632, 471735, 92565, 68598, 139066, 47124, 2668, 392}},  // Tc 3c
    {{372405, 916776, 471735, 92565, 76029, 139022, 47124, 2668, 436}},  // Tc 4c
    {{372405, 916776, 471735, 92565, 76029, 139022, 47124, 2668, 436}},  // Tc 5c
    {{364170, 902496, 469092, 92004, 101748, 138077, 47124, 2668, 1381}},  // Tc 6c
    {{355020, 888216, 466449, 91443, 128382, 137131, 47124, 2668, 2327}},  // Tc 7c
    {{345870, 873936, 463806, 90882, 155016, 136185, 47124, 2668, 3273}},  // Tc 8c
    {{336720, 859656, 461163, 90321, 181650, 135239, 47124, 2668, 4219}},  // Tc 9c
    {{0, 744480, 835920, 247940, 49690, 41298, 181104, 17848, 480}},  // Tc Td
    {{363330, 905408, 471950, 92092, 194410, 41342, 47124, 2668, 436}},  // Jc Td
    {{378180, 923456, 474660, 92664, 158230, 41386, 47124, 2668, 392}},  // Qc Td
    {{393030, 941504, 477370, 93236, 122050, 41430, 47124, 2668, 348}},  // Kc Td
    {{402930, 956544, 480080, 93808, 93828, 41430, 47124, 2668, 348}},  // Ac Td
    {{386130, 925344, 471735, 92565, 53736, 139154, 47124, 2668, 304}},  // Jc 2c
    {{381555, 922488, 471735, 92565, 61167, 139110, 47124, 2668, 348}},  // Jc 3c
    {{376980, 919632, 471735, 92565, 68598, 139066, 47124, 2668, 392}},  // Jc 4c
    {{372405, 916776, 471735, 92565, 76029, 139022, 47124, 2668, 436}},  // Jc 5c
    {{377895, 919632, 471735, 92565, 67683, 139067, 47124, 2668, 391}},  // Jc 6c
    {{368745, 905352, 469092, 92004, 94317, 138121, 47124, 2668, 1337}},  // Jc 7c
    {{359595, 891072, 466449, 91443, 120951, 137175, 47124, 2668, 2283}},  // Jc 8c
    {{350445, 876792, 463806, 90882, 147585, 136229, 47124, 2668, 3229}},  // Jc 9c
    {{335805, 859656, 461163, 90321, 182565, 135238, 47124, 2668, 4220}},  // Jc Tc
    {{0, 750420, 837432, 248446, 41732, 41386, 181104, 17848, 392}},  // Jc Jd
    {{383130, 926464, 474660, 92664, 150272, 41430, 47124, 2668, 348}},  // Qc Jd
    {{397980, 944512, 477370, 93236, 114092, 41474, 47124, 2668, 304}},  // Kc Jd
    {{407880, 959552, 480080, 93808, 85870, 41474, 47124, 2668, 304}},  // Ac Jd
    {{390705, 928200, 471735, 92565, 46305, 139198, 47124, 2668, 260}},  // Qc 2c
    {{386130, 925344, 471735, 92565, 53736, 139154, 47124, 2668, 304}},  // Qc 3c
    {{381555, 922488, 471735, 92565, 61167, 139110, 47124, 2668, 348}},  // Qc 4c
    {{376980, 919632, 471735, 92565, 68598, 139066, 47124, 2668, 392}},  // Qc 5c
    {{377895, 919632, 471735, 92565, 67683, 139067, 47124, 2668, 391}},  // Qc 6c
    {{382470, 922488, 471735, 92565, 60252, 139111, 47124, 2668, 347}},  // Qc 7c
    {{373320, 908208, 469092, 92004, 86886, 138165, 47124, 2668, 1293}},  // Qc 8c
    {{364170, 893928, 466449, 91443, 113520, 137219, 47124, 2668, 2239}},  // Qc 9c
    {{349530, 876792, 463806, 90882, 148500, 136228, 47124, 2668, 3230}},  // Qc Tc
    {{354105, 879648, 463806, 90882, 141069, 136272, 47124, 2668, 3186}},  // Qc Jc
    {{0, 756360, 838944, 248952, 33774, 41474, 181104, 17848, 304}},  // Qc Qd
    {{402930, 947520, 477370, 93236, 106134, 41518, 47124, 2668, 260}},  // Kc Qd
    {{412830, 962560, 480080, 93808, 77912, 41518, 47124, 2668, 260}},  // Ac Qd
    {{395280, 931056, 471735, 92565, 38874, 139242, 47124, 2668, 216}},  // Kc 2c
    {{390705, 928200, 471735, 92565, 46305, 139198, 47124, 2668, 260}},  // Kc 3c
    {{386130, 925344, 471735, 92565, 53736, 139154, 47124, 2668, 304}},  // Kc 4c
    {{381555, 922488, 471735, 92565, 61167, 139110, 47124, 2668, 348}},  // Kc 5c
    {{382470, 922488, 471735, 92565, 60252, 139111, 47124, 2668, 347}},  // Kc 6c
    {{382470, 922488, 471735, 92565, 60252, 139111, 47124, 2668, 347}},  // Kc 7c
    {{387045, 925344, 471735, 92565, 52821, 139155, 47124, 2668, 303}},  // Kc 8c
    {{377895, 911064, 469092, 92004, 79455, 138209, 47124, 2668, 1249}},  // Kc 9c
    {{363255, 893928, 466449, 91443, 114435, 137218, 47124, 2668, 2240}},  // Kc Tc
    {{367830, 896784, 466449, 91443, 107004, 137262, 47124, 2668, 2196}},  // Kc Jc
    {{372405, 899640, 466449, 91443, 99573, 137306, 47124, 2668, 2152}},  // Kc Qc
    {{0, 762300, 840456, 249458, 25816, 41562, 181104, 17848, 216}},  // Kc Kd
    {{417780, 965568, 480080, 93808, 69954, 41562, 47124, 2668, 216}},  // Ac Kd
    {{386130, 916776, 469092, 92004, 65508, 138296, 47124, 2668, 1162}},  // Ac 2c
    {{381555, 913920, 469092, 92004, 72939, 138252, 47124, 2668, 1206}},  // Ac 3c
    {{376980, 911064, 469092, 92004, 80370, 138208, 47124, 2668, 1250}},  // Ac 4c
    {{372405, 908208, 469092, 92004, 87801, 138164, 47124, 2668, 1294}},  // Ac 5c
    {{387045, 925344, 471735, 92565, 52821, 139155, 47124, 2668, 303}},  // Ac 6c
    {{382470, 922488, 471735, 92565, 60252, 139111, 47124, 2668, 347}},  // Ac 7c
    {{382470, 922488, 471735, 92565, 60252, 139111, 47124, 2668, 347}},  // Ac 8c
    {{387045, 925344, 471735, 92565, 52821, 139155, 47124, 2668, 303}},  // Ac 9c
    {{372405, 908208, 469092, 92004, 87801, 138164, 47124, 2668, 1294}},  // Ac Tc
    {{376980, 911064, 469092, 92004, 80370, 138208, 47124, 2668, 1250}},  // Ac Jc
    {{381555, 913920, 469092, 92004, 72939, 138252, 47124, 2668, 1206}},  // Ac Qc
    {{386130, 916776, 469092, 92004, 65508, 138296, 47124, 2668, 1162}},  // Ac Kc
    {{0, 762300, 840456, 249458, 25816, 41562, 181104, 17848, 216}},  // Ac Ad
}};

}  // namespace pokerprob
