#pragma once
// Sobol direction-number table (Joe-Kuo D6 primitive polynomials and
// initial direction numbers), dimensions 2..1200. Dimension 1 uses the
// van der Corput recurrence and needs no table entry.
#include <cstdint>

namespace svpkg::detail {

inline constexpr int kSobolMaxDimension = 1200;

struct SobolDimensionInfo {
  std::uint8_t degree;
  std::uint32_t poly;  // a_1..a_{degree-1}, a_i in bit i-1
  std::uint16_t m_offset;
};

inline constexpr SobolDimensionInfo kSobolDims[1199] = {
    {1, 0u, 0u}, {2, 1u, 1u}, {3, 2u, 3u}, {3, 1u, 6u},
    {4, 4u, 9u}, {4, 1u, 13u}, {5, 4u, 17u}, {5, 2u, 22u},
    {5, 14u, 27u}, {5, 13u, 32u}, {5, 11u, 37u}, {5, 7u, 42u},
    {6, 16u, 47u}, {6, 22u, 53u}, {6, 1u, 59u}, {6, 25u, 65u},
    {6, 13u, 71u}, {6, 19u, 77u}, {7, 32u, 83u}, {7, 8u, 90u},
    {7, 56u, 97u}, {7, 4u, 104u}, {7, 28u, 111u}, {7, 50u, 118u},
    {7, 42u, 125u}, {7, 14u, 132u}, {7, 62u, 139u}, {7, 1u, 146u},
    {7, 41u, 153u}, {7, 37u, 160u}, {7, 21u, 167u}, {7, 19u, 174u},
    {7, 59u, 181u}, {7, 7u, 188u}, {7, 55u, 195u}, {7, 31u, 202u},
    {8, 56u, 209u}, {8, 84u, 217u}, {8, 52u, 225u}, {8, 50u, 233u},
    {8, 122u, 241u}, {8, 70u, 249u}, {8, 38u, 257u}, {8, 22u, 265u},
    {8, 14u, 273u}, {8, 97u, 281u}, {8, 49u, 289u}, {8, 21u, 297u},
    {8, 67u, 305u}, {8, 115u, 313u}, {8, 103u, 321u}, {8, 47u, 329u},
    {9, 16u, 337u}, {9, 176u, 346u}, {9, 8u, 355u}, {9, 104u, 364u},
    {9, 152u, 373u}, {9, 52u, 382u}, {9, 244u, 391u}, {9, 44u, 400u},
    {9, 236u, 409u}, {9, 220u, 418u}, {9, 124u, 427u}, {9, 194u, 436u},
    {9, 82u, 445u}, {9, 138u, 454u}, {9, 74u, 463u}, {9, 234u, 472u},
    {9, 218u, 481u}, {9, 122u, 490u}, {9, 230u, 499u}, {9, 22u, 508u},
    {9, 182u, 517u}, {9, 94u, 526u}, {9, 62u, 535u}, {9, 145u, 544u},
    {9, 81u, 553u}, {9, 241u, 562u}, {9, 137u, 571u}, {9, 25u, 580u},
    {9, 185u, 589u}, {9, 229u, 598u}, {9, 181u, 607u}, {9, 13u, 616u},
    {9, 173u, 625u}, {9, 109u, 634u}, {9, 157u, 643u}, {9, 253u, 652u},
    {9, 67u, 661u}, {9, 227u, 670u}, {9, 91u, 679u}, {9, 59u, 688u},
    {9, 199u, 697u}, {9, 167u, 706u}, {9, 103u, 715u}, {9, 87u, 724u},
    {9, 55u, 733u}, {9, 143u, 742u}, {9, 47u, 751u}, {9, 191u, 760u},
    {10, 64u, 769u}, {10, 352u, 779u}, {10, 400u, 789u}, {10, 208u, 799u},
    {10, 152u, 809u}, {10, 472u, 819u}, {10, 4u, 829u}, {10, 324u, 839u},
    {10, 140u, 849u}, {10, 428u, 859u}, {10, 412u, 869u}, {10, 316u, 879u},
    {10, 508u, 889u}, {10, 194u, 899u}, {10, 98u, 909u}, {10, 274u, 919u},
    {10, 50u, 929u}, {10, 242u, 939u}, {10, 266u, 949u}, {10, 426u, 959u},
    {10, 346u, 969u}, {10, 134u, 979u}, {10, 454u, 989u}, {10, 422u, 999u},
    {10, 22u, 1009u}, {10, 398u, 1019u}, {10, 158u, 1029u}, {10, 446u, 1039u},
    {10, 382u, 1049u}, {10, 289u, 1059u}, {10, 161u, 1069u}, {10, 145u, 1079u},
    {10, 433u, 1089u}, {10, 265u, 1099u}, {10, 457u, 1109u}, {10, 361u, 1119u},
    {10, 121u, 1129u}, {10, 505u, 1139u}, {10, 69u, 1149u}, {10, 181u, 1159u},
    {10, 13u, 1169u}, {10, 301u, 1179u}, {10, 493u, 1189u}, {10, 253u, 1199u},
    {10, 419u, 1209u}, {10, 227u, 1219u}, {10, 19u, 1229u}, {10, 115u, 1239u},
    {10, 395u, 1249u}, {10, 203u, 1259u}, {10, 171u, 1269u}, {10, 107u, 1279u},
    {10, 283u, 1289u}, {10, 251u, 1299u}, {10, 199u, 1309u}, {10, 295u, 1319u},
    {10, 55u, 1329u}, {10, 367u, 1339u}, {10, 319u, 1349u}, {10, 127u, 1359u},
    {11, 256u, 1369u}, {11, 832u, 1380u}, {11, 672u, 1391u}, {11, 416u, 1402u},
    {11, 784u, 1413u}, {11, 560u, 1424u}, {11, 304u, 1435u}, {11, 112u, 1446u},
    {11, 752u, 1457u}, {11, 392u, 1468u}, {11, 328u, 1479u}, {11, 968u, 1490u},
    {11, 168u, 1501u}, {11, 104u, 1512u}, {11, 920u, 1523u}, {11, 88u, 1534u},
    {11, 56u, 1545u}, {11, 824u, 1556u}, {11, 696u, 1567u}, {11, 376u, 1578u},
    {11, 388u, 1589u}, {11, 580u, 1600u}, {11, 292u, 1611u}, {11, 164u, 1622u},
    {11, 740u, 1633u}, {11, 484u, 1644u}, {11, 276u, 1655u}, {11, 148u, 1666u},
    {11, 84u, 1677u}, {11, 724u, 1688u}, {11, 628u, 1699u}, {11, 372u, 1710u},
    {11, 1012u, 1721u}, {11, 524u, 1732u}, {11, 908u, 1743u}, {11, 684u, 1754u},
    {11, 428u, 1765u}, {11, 236u, 1776u}, {11, 796u, 1787u}, {11, 220u, 1798u},
    {11, 316u, 1809u}, {11, 892u, 1820u}, {11, 2u, 1831u}, {11, 770u, 1842u},
    {11, 578u, 1853u}, {11, 322u, 1864u}, {11, 162u, 1875u}, {11, 146u, 1886u},
    {11, 50u, 1897u}, {11, 434u, 1908u}, {11, 242u, 1919u}, {11, 1010u, 1930u},
    {11, 266u, 1941u}, {11, 74u, 1952u}, {11, 458u, 1963u}, {11, 810u, 1974u},
    {11, 682u, 1985u}, {11, 618u, 1996u}, {11, 362u, 2007u}, {11, 346u, 2018u},
    {11, 986u, 2029u}, {11, 186u, 2040u}, {11, 954u, 2051u}, {11, 122u, 2062u},
    {11, 762u, 2073u}, {11, 518u, 2084u}, {11, 134u, 2095u}, {11, 70u, 2106u},
    {11, 614u, 2117u}, {11, 998u, 2128u}, {11, 22u, 2139u}, {11, 662u, 2150u},
    {11, 214u, 2161u}, {11, 982u, 2172u}, {11, 310u, 2183u}, {11, 950u, 2194u},
    {11, 502u, 2205u}, {11, 782u, 2216u}, {11, 654u, 2227u}, {11, 590u, 2238u},
    {11, 334u, 2249u}, {11, 942u, 2260u}, {11, 878u, 2271u}, {11, 494u, 2282u},
    {11, 158u, 2293u}, {11, 734u, 2304u}, {11, 478u, 2315u}, {11, 830u, 2326u},
    {11, 446u, 2337u}, {11, 641u, 2348u}, {11, 385u, 2359u}, {11, 193u, 2370u},
    {11, 961u, 2381u}, {11, 849u, 2392u}, {11, 49u, 2403u}, {11, 689u, 2414u},
    {11, 625u, 2425u}, {11, 265u, 2436u}, {11, 137u, 2447u}, {11, 841u, 2458u},
    {11, 713u, 2469u}, {11, 457u, 2480u}, {11, 617u, 2491u}, {11, 1001u, 2502u},
    {11, 793u, 2513u}, {11, 409u, 2524u}, {11, 601u, 2535u}, {11, 345u, 2546u},
    {11, 569u, 2557u}, {11, 185u, 2568u}, {11, 889u, 2579u}, {11, 517u, 2590u},
    {11, 901u, 2601u}, {11, 453u, 2612u}, {11, 805u, 2623u}, {11, 421u, 2634u},
    {11, 21u, 2645u}, {11, 789u, 2656u}, {11, 341u, 2667u}, {11, 213u, 2678u},
    {11, 565u, 2689u}, {11, 949u, 2700u}, {11, 117u, 2711u}, {11, 589u, 2722u},
    {11, 973u, 2733u}, {11, 173u, 2744u}, {11, 749u, 2755u}, {11, 493u, 2766u},
    {11, 157u, 2777u}, {11, 861u, 2788u}, {11, 733u, 2799u}, {11, 61u, 2810u},
    {11, 829u, 2821u}, {11, 381u, 2832u}, {11, 259u, 2843u}, {11, 451u, 2854u},
    {11, 35u, 2865u}, {11, 803u, 2876u}, {11, 675u, 2887u}, {11, 611u, 2898u},
    {11, 227u, 2909u}, {11, 787u, 2920u}, {11, 659u, 2931u}, {11, 339u, 2942u},
    {11, 979u, 2953u}, {11, 115u, 2964u}, {11, 755u, 2975u}, {11, 499u, 2986u},
    {11, 11u, 2997u}, {11, 587u, 3008u}, {11, 971u, 3019u}, {11, 555u, 3030u},
    {11, 747u, 3041u}, {11, 923u, 3052u}, {11, 475u, 3063u}, {11, 635u, 3074u},
    {11, 251u, 3085u}, {11, 647u, 3096u}, {11, 199u, 3107u}, {11, 103u, 3118u},
    {11, 871u, 3129u}, {11, 471u, 3140u}, {11, 695u, 3151u}, {11, 439u, 3162u},
    {11, 375u, 3173u}, {11, 527u, 3184u}, {11, 79u, 3195u}, {11, 847u, 3206u},
    {11, 719u, 3217u}, {11, 815u, 3228u}, {11, 431u, 3239u}, {11, 367u, 3250u},
    {11, 415u, 3261u}, {11, 607u, 3272u}, {11, 319u, 3283u}, {11, 191u, 3294u},
    {12, 1184u, 3305u}, {12, 352u, 3317u}, {12, 1504u, 3329u}, {12, 992u, 3341u},
    {12, 400u, 3353u}, {12, 176u, 3365u}, {12, 1392u, 3377u}, {12, 1544u, 3389u},
    {12, 1928u, 3401u}, {12, 1096u, 3413u}, {12, 1480u, 3425u}, {12, 1832u, 3437u},
    {12, 1704u, 3449u}, {12, 104u, 3461u}, {12, 1384u, 3473u}, {12, 536u, 3485u},
    {12, 1240u, 3497u}, {12, 440u, 3509u}, {12, 1976u, 3521u}, {12, 772u, 3533u},
    {12, 1732u, 3545u}, {12, 964u, 3557u}, {12, 1636u, 3569u}, {12, 1252u, 3581u},
    {12, 2020u, 3593u}, {12, 468u, 3605u}, {12, 52u, 3617u}, {12, 1332u, 3629u},
    {12, 1804u, 3641u}, {12, 908u, 3653u}, {12, 76u, 3665u}, {12, 460u, 3677u},
    {12, 1996u, 3689u}, {12, 812u, 3701u}, {12, 236u, 3713u}, {12, 412u, 3725u},
    {12, 1116u, 3737u}, {12, 348u, 3749u}, {12, 1538u, 3761u}, {12, 194u, 3773u},
    {12, 1730u, 3785u}, {12, 1826u, 3797u}, {12, 930u, 3809u}, {12, 1634u, 3821u},
    {12, 738u, 3833u}, {12, 1618u, 3845u}, {12, 850u, 3857u}, {12, 1202u, 3869u},
    {12, 1802u, 3881u}, {12, 906u, 3893u}, {12, 810u, 3905u}, {12, 1178u, 3917u},
    {12, 570u, 3929u}, {12, 1722u, 3941u}, {12, 954u, 3953u}, {12, 1402u, 3965u},
    {12, 262u, 3977u}, {12, 1574u, 3989u}, {12, 678u, 4001u}, {12, 422u, 4013u},
    {12, 598u, 4025u}, {12, 982u, 4037u}, {12, 654u, 4049u}, {12, 398u, 4061u},
    {12, 1070u, 4073u}, {12, 558u, 4085u}, {12, 750u, 4097u}, {12, 286u, 4109u},
    {12, 862u, 4121u}, {12, 1246u, 4133u}, {12, 2014u, 4145u}, {12, 62u, 4157u},
    {12, 1697u, 4169u}, {12, 929u, 4181u}, {12, 145u, 4193u}, {12, 1681u, 4205u},
    {12, 465u, 4217u}, {12, 1905u, 4229u}, {12, 1417u, 4241u}, {12, 713u, 4253u},
    {12, 41u, 4265u}, {12, 617u, 4277u}, {12, 1513u, 4289u}, {12, 1305u, 4301u},
    {12, 217u, 4313u}, {12, 985u, 4325u}, {12, 313u, 4337u}, {12, 1849u, 4349u},
    {12, 1657u, 4361u}, {12, 1413u, 4373u}, {12, 1349u, 4385u}, {12, 1221u, 4397u},
    {12, 357u, 4409u}, {12, 1301u, 4421u}, {12, 181u, 4433u}, {12, 117u, 4445u},
    {12, 757u, 4457u}, {12, 1293u, 4469u}, {12, 1165u, 4481u}, {12, 1933u, 4493u},
    {12, 1709u, 4505u}, {12, 157u, 4517u}, {12, 1629u, 4529u}, {12, 2013u, 4541u},
    {12, 61u, 4553u}, {12, 1213u, 4565u}, {12, 515u, 4577u}, {12, 131u, 4589u},
    {12, 1667u, 4601u}, {12, 1603u, 4613u}, {12, 803u, 4625u}, {12, 1555u, 4637u},
    {12, 1939u, 4649u}, {12, 595u, 4661u}, {12, 1491u, 4673u}, {12, 563u, 4685u},
    {12, 307u, 4697u}, {12, 1843u, 4709u}, {12, 1267u, 4721u}, {12, 1547u, 4733u},
    {12, 1099u, 4745u}, {12, 1067u, 4757u}, {12, 171u, 4769u}, {12, 1451u, 4781u},
    {12, 747u, 4793u}, {12, 539u, 4805u}, {12, 283u, 4817u}, {12, 647u, 4829u},
    {12, 391u, 4841u}, {12, 1863u, 4853u}, {12, 551u, 4865u}, {12, 167u, 4877u},
    {12, 1639u, 4889u}, {12, 1255u, 4901u}, {12, 1815u, 4913u}, {12, 1143u, 4925u},
    {12, 143u, 4937u}, {12, 1423u, 4949u}, {12, 1615u, 4961u}, {12, 239u, 4973u},
    {12, 415u, 4985u}, {12, 1503u, 4997u}, {12, 991u, 5009u}, {12, 319u, 5021u},
    {13, 2816u, 5033u}, {13, 3200u, 5046u}, {13, 1408u, 5059u}, {13, 2368u, 5072u},
    {13, 1216u, 5085u}, {13, 3776u, 5098u}, {13, 2592u, 5111u}, {13, 1568u, 5124u},
    {13, 3872u, 5137u}, {13, 1184u, 5150u}, {13, 3744u, 5163u}, {13, 2976u, 5176u},
    {13, 1952u, 5189u}, {13, 2144u, 5202u}, {13, 608u, 5215u}, {13, 224u, 5228u},
    {13, 2528u, 5241u}, {13, 1552u, 5254u}, {13, 1296u, 5267u}, {13, 656u, 5280u},
    {13, 3728u, 5293u}, {13, 2960u, 5306u}, {13, 2128u, 5319u}, {13, 3280u, 5332u},
    {13, 2768u, 5345u}, {13, 976u, 5358u}, {13, 560u, 5371u}, {13, 3376u, 5384u},
    {13, 1840u, 5397u}, {13, 4016u, 5410u}, {13, 112u, 5423u}, {13, 3184u, 5436u},
    {13, 1648u, 5449u}, {13, 3952u, 5462u}, {13, 2288u, 5475u}, {13, 496u, 5488u},
    {13, 3056u, 5501u}, {13, 776u, 5514u}, {13, 1160u, 5527u}, {13, 3464u, 5540u},
    {13, 1928u, 5553u}, {13, 2120u, 5566u}, {13, 2888u, 5579u}, {13, 1864u, 5592u},
    {13, 968u, 5605u}, {13, 4040u, 5618u}, {13, 552u, 5631u}, {13, 3368u, 5644u},
    {13, 2856u, 5657u}, {13, 2472u, 5670u}, {13, 4008u, 5683u}, {13, 1640u, 5696u},
    {13, 3816u, 5709u}, {13, 3560u, 5722u}, {13, 3048u, 5735u}, {13, 1048u, 5748u},
    {13, 3224u, 5761u}, {13, 2712u, 5774u}, {13, 3160u, 5787u}, {13, 1368u, 5800u},
    {13, 856u, 5813u}, {13, 3800u, 5826u}, {13, 472u, 5839u}, {13, 2008u, 5852u},
    {13, 3128u, 5865u}, {13, 1592u, 5878u}, {13, 1336u, 5891u}, {13, 2232u, 5904u},
    {13, 696u, 5917u}, {13, 440u, 5930u}, {13, 3512u, 5943u}, {13, 3000u, 5956u},
    {13, 248u, 5969u}, {13, 1784u, 5982u}, {13, 1016u, 5995u}, {13, 2564u, 6008u},
    {13, 2308u, 6021u}, {13, 3844u, 6034u}, {13, 1156u, 6047u}, {13, 644u, 6060u},
    {13, 1924u, 6073u}, {13, 324u, 6086u}, {13, 3396u, 6099u}, {13, 196u, 6112u},
    {13, 1732u, 6125u}, {13, 4036u, 6138u}, {13, 2084u, 6151u}, {13, 2852u, 6164u},
    {13, 1828u, 6177u}, {13, 1444u, 6190u}, {13, 4004u, 6203u}, {13, 100u, 6216u},
    {13, 3172u, 6229u}, {13, 2660u, 6242u}, {13, 2276u, 6255u}, {13, 532u, 6268u},
    {13, 3348u, 6281u}, {13, 1812u, 6294u}, {13, 148u, 6307u}, {13, 1684u, 6320u},
    {13, 916u, 6333u}, {13, 2388u, 6346u}, {13, 1364u, 6359u}, {13, 2260u, 6372u},
    {13, 468u, 6385u}, {13, 3540u, 6398u}, {13, 3124u, 6411u}, {13, 2612u, 6424u},
    {13, 1332u, 6437u}, {13, 820u, 6450u}, {13, 3892u, 6463u}, {13, 3764u, 6476u},
    {13, 1972u, 6489u}, {13, 1140u, 6502u}, {13, 3700u, 6515u}, {13, 3444u, 6528u},
    {13, 2804u, 6541u}, {13, 2060u, 6554u}, {13, 1036u, 6567u}, {13, 268u, 6580u},
    {13, 1676u, 6593u}, {13, 3980u, 6606u}, {13, 2636u, 6619u}, {13, 2380u, 6632u},
    {13, 844u, 6645u}, {13, 716u, 6658u}, {13, 3532u, 6671u}, {13, 3020u, 6684u},
    {13, 3116u, 6697u}, {13, 2348u, 6710u}, {13, 812u, 6723u}, {13, 428u, 6736u},
    {13, 3500u, 6749u}, {13, 1964u, 6762u}, {13, 2156u, 6775u}, {13, 2796u, 6788u},
    {13, 1516u, 6801u}, {13, 2332u, 6814u}, {13, 668u, 6827u}, {13, 2972u, 6840u},
    {13, 3676u, 6853u}, {13, 3420u, 6866u}, {13, 1884u, 6879u}, {13, 2780u, 6892u},
    {13, 2524u, 6905u}, {13, 988u, 6918u}, {13, 2108u, 6931u}, {13, 316u, 6944u},
    {13, 188u, 6957u}, {13, 956u, 6970u}, {13, 3196u, 6983u}, {13, 2684u, 6996u},
    {13, 3964u, 7009u}, {13, 3836u, 7022u}, {13, 508u, 7035u}, {13, 3074u, 7048u},
    {13, 770u, 7061u}, {13, 3842u, 7074u}, {13, 2178u, 7087u}, {13, 386u, 7100u},
    {13, 2946u, 7113u}, {13, 1922u, 7126u}, {13, 1090u, 7139u}, {13, 3266u, 7152u},
    {13, 1474u, 7165u}, {13, 1058u, 7178u}, {13, 2722u, 7191u}, {13, 1698u, 7204u},
    {13, 4002u, 7217u}, {13, 1634u, 7230u}, {13, 1378u, 7243u}, {13, 3938u, 7256u},
    {13, 2274u, 7269u}, {13, 738u, 7282u}, {13, 3042u, 7295u}, {13, 530u, 7308u},
    {13, 3602u, 7321u}, {13, 274u, 7334u}, {13, 2834u, 7347u}, {13, 2706u, 7360u},
    {13, 1426u, 7373u}, {13, 3986u, 7386u}, {13, 82u, 7399u}, {13, 2642u, 7412u},
    {13, 1362u, 7425u}, {13, 3538u, 7438u}, {13, 2002u, 7451u}, {13, 50u, 7464u},
    {13, 2354u, 7477u}, {13, 3890u, 7490u}, {13, 3762u, 7503u}, {13, 3506u, 7516u},
    {13, 1970u, 7529u}, {13, 2162u, 7542u}, {13, 3442u, 7555u}, {13, 2546u, 7568u},
    {13, 1522u, 7581u}, {13, 2058u, 7594u}, {13, 3594u, 7607u}, {13, 1802u, 7620u},
    {13, 138u, 7633u}, {13, 2442u, 7646u}, {13, 1418u, 7659u}, {13, 1610u, 7672u},
    {13, 714u, 7685u}, {13, 3786u, 7698u}, {13, 458u, 7711u}, {13, 3018u, 7724u},
    {13, 1994u, 7737u}, {13, 1194u, 7750u}, {13, 682u, 7763u}, {13, 426u, 7776u},
    {13, 1130u, 7789u}, {13, 3434u, 7802u}, {13, 2922u, 7815u}, {13, 2794u, 7828u},
    {13, 2538u, 7841u}, {13, 26u, 7854u}, {13, 1306u, 7867u}, {13, 2202u, 7880u},
    {13, 1178u, 7893u}, {13, 3738u, 7906u}, {13, 3482u, 7919u}, {13, 2138u, 7932u},
    {13, 602u, 7945u}, {13, 1754u, 7958u}, {13, 4058u, 7971u}, {13, 1082u, 7984u},
    {13, 3386u, 7997u}, {13, 2874u, 8010u}, {13, 1722u, 8023u}, {13, 2490u, 8036u},
    {13, 890u, 8049u}, {13, 1274u, 8062u}, {13, 2042u, 8075u}, {13, 3590u, 8088u},
    {13, 134u, 8101u}, {13, 2694u, 8114u}, {13, 1670u, 8127u}, {13, 3974u, 8140u},
    {13, 70u, 8153u}, {13, 1606u, 8166u}, {13, 454u, 8179u}, {13, 2598u, 8192u},
    {13, 1574u, 8205u}, {13, 1318u, 8218u}, {13, 2214u, 8231u}, {13, 3750u, 8244u},
    {13, 1958u, 8257u}, {13, 1126u, 8270u}, {13, 358u, 8283u}, {13, 3430u, 8296u},
    {13, 230u, 8309u}, {13, 3302u, 8322u}, {13, 2790u, 8335u}, {13, 1558u, 8348u},
    {13, 790u, 8361u}, {13, 662u, 8374u}, {13, 3734u, 8387u}, {13, 3478u, 8400u},
    {13, 2966u, 8413u}, {13, 1110u, 8426u}, {13, 2902u, 8439u}, {13, 3286u, 8452u},
    {13, 1494u, 8465u}, {13, 566u, 8478u}, {13, 3638u, 8491u}, {13, 3254u, 8504u},
    {13, 2742u, 8517u}, {13, 1462u, 8530u}, {13, 2294u, 8543u}, {13, 502u, 8556u},
    {13, 2038u, 8569u}, {13, 3086u, 8582u}, {13, 2318u, 8595u}, {13, 1294u, 8608u},
    {13, 654u, 8621u}, {13, 590u, 8634u}, {13, 3662u, 8647u}, {13, 2894u, 8660u},
    {13, 1870u, 8673u}, {13, 206u, 8686u}, {13, 2766u, 8699u}, {13, 3630u, 8712u},
    {13, 302u, 8725u}, {13, 3374u, 8738u}, {13, 1838u, 8751u}, {13, 2734u, 8764u},
    {13, 2478u, 8777u}, {13, 942u, 8790u}, {13, 3950u, 8803u}, {13, 3054u, 8816u},
    {13, 2030u, 8829u}, {13, 1054u, 8842u}, {13, 542u, 8855u}, {13, 286u, 8868u},
    {13, 3358u, 8881u}, {13, 3998u, 8894u}, {13, 94u, 8907u}, {13, 2654u, 8920u},
    {13, 1630u, 8933u}, {13, 862u, 8946u}, {13, 3934u, 8959u}, {13, 1246u, 8972u},
    {13, 734u, 8985u}, {13, 1342u, 8998u}, {13, 1214u, 9011u}, {13, 3774u, 9024u},
    {13, 446u, 9037u}, {13, 3710u, 9050u}, {13, 1918u, 9063u}, {13, 3326u, 9076u},
    {13, 1790u, 9089u}, {13, 1534u, 9102u}, {13, 4094u, 9115u}, {13, 3073u, 9128u},
    {13, 1281u, 9141u}, {13, 769u, 9154u}, {13, 3713u, 9167u}, {13, 577u, 9180u},
    {13, 3649u, 9193u}, {13, 3265u, 9206u}, {13, 961u, 9219u}, {13, 4033u, 9232u},
    {13, 289u, 9245u}, {13, 161u, 9258u}, {13, 1441u, 9271u}, {13, 4001u, 9284u},
    {13, 97u, 9297u}, {13, 2401u, 9310u}, {13, 865u, 9323u}, {13, 1249u, 9336u},
    {13, 3809u, 9349u}, {13, 1041u, 9362u}, {13, 3601u, 9375u}, {13, 1425u, 9388u},
    {13, 3153u, 9401u}, {13, 1617u, 9414u}, {13, 3921u, 9427u}, {13, 2257u, 9440u},
    {13, 465u, 9453u}, {13, 3025u, 9466u}, {13, 2225u, 9479u}, {13, 689u, 9492u},
    {13, 3505u, 9505u}, {13, 1137u, 9518u}, {13, 625u, 9531u}, {13, 2929u, 9544u},
    {13, 241u, 9557u}, {13, 2801u, 9570u}, {13, 1777u, 9583u}, {13, 2545u, 9596u},
    {13, 4081u, 9609u}, {13, 521u, 9622u}, {13, 3593u, 9635u}, {13, 1801u, 9648u},
    {13, 3209u, 9661u}, {13, 905u, 9674u}, {13, 2633u, 9687u}, {13, 2377u, 9700u},
    {13, 841u, 9713u}, {13, 1225u, 9726u}, {13, 41u, 9739u}, {13, 2345u, 9752u},
    {13, 809u, 9765u}, {13, 3881u, 9778u}, {13, 681u, 9791u}, {13, 3497u, 9804u},
    {13, 2985u, 9817u}, {13, 2153u, 9830u}, {13, 3433u, 9843u}, {13, 2921u, 9856u},
    {13, 3305u, 9869u}, {13, 3097u, 9882u}, {13, 1305u, 9895u}, {13, 3737u, 9908u},
    {13, 345u, 9921u}, {13, 1881u, 9934u}, {13, 1497u, 9947u}, {13, 3385u, 9960u},
    {13, 2873u, 9973u}, {13, 2745u, 9986u}, {13, 953u, 9999u}, {13, 121u, 10012u},
    {13, 3193u, 10025u}, {13, 1401u, 10038u}, {13, 2297u, 10051u}, {13, 1273u, 10064u},
    {13, 3577u, 10077u}, {13, 3065u, 10090u}, {13, 517u, 10103u}, {13, 2821u, 10116u},
    {13, 3205u, 10129u}, {13, 69u, 10142u}, {13, 1605u, 10155u}, {13, 3909u, 10168u},
    {13, 709u, 10181u}, {13, 3525u, 10194u}, {13, 3013u, 10207u}, {13, 3109u, 10220u},
    {13, 2341u, 10233u}, {13, 805u, 10246u}, {13, 1189u, 10259u}, {13, 1957u, 10272u},
    {13, 613u, 10285u}, {13, 2917u, 10298u}, {13, 3301u, 10311u}, {13, 997u, 10324u},
    {13, 1557u, 10337u}, {13, 3861u, 10350u}, {13, 1173u, 10363u}, {13, 405u, 10376u},
    {13, 3477u, 10389u}, {13, 1109u, 10402u}, {13, 3669u, 10415u}, {13, 1877u, 10428u},
    {13, 1749u, 10441u}, {13, 2517u, 10454u}, {13, 4053u, 10467u}, {13, 1845u, 10480u},
    {13, 181u, 10493u}, {13, 949u, 10506u}, {13, 1653u, 10519u}, {13, 1397u, 10532u},
    {13, 885u, 10545u}, {13, 2293u, 10558u}, {13, 757u, 10571u}, {13, 3829u, 10584u},
    {13, 13u, 10597u}, {13, 2573u, 10610u}, {13, 3853u, 10623u}, {13, 1165u, 10636u},
    {13, 3725u, 10649u}, {13, 2957u, 10662u}, {13, 589u, 10675u}, {13, 333u, 10688u},
    {13, 2893u, 10701u}, {13, 2509u, 10714u}, {13, 1485u, 10727u}, {13, 301u, 10740u},
    {13, 2861u, 10753u}, {13, 1837u, 10766u}, {13, 1709u, 10779u}, {13, 2669u, 10792u},
    {13, 2413u, 10805u}, {13, 1389u, 10818u}, {13, 2285u, 10831u}, {13, 3821u, 10844u},
    {13, 1053u, 10857u}, {13, 3613u, 10870u}, {13, 2845u, 10883u}, {13, 157u, 10896u},
    {13, 1693u, 10909u}, {13, 925u, 10922u}, {13, 93u, 10935u}, {13, 3165u, 10948u},
    {13, 2397u, 10961u}, {13, 477u, 10974u}, {13, 3549u, 10987u}, {13, 2621u, 11000u},
    {13, 1341u, 11013u}, {13, 829u, 11026u}, {13, 2237u, 11039u}, {13, 1149u, 11052u},
    {13, 3709u, 11065u}, {13, 381u, 11078u}, {13, 3453u, 11091u}, {13, 1917u, 11104u},
    {13, 253u, 11117u}, {13, 2557u, 11130u}, {13, 2051u, 11143u}, {13, 1027u, 11156u},
    {13, 3331u, 11169u}, {13, 1795u, 11182u}, {13, 3203u, 11195u}, {13, 2435u, 11208u},
    {13, 2627u, 11221u}, {13, 835u, 11234u}, {13, 707u, 11247u}, {13, 451u, 11260u},
    {13, 2211u, 11273u}, {13, 419u, 11286u}, {13, 2979u, 11299u}, {13, 611u, 11312u},
    {13, 3683u, 11325u}, {13, 227u, 11338u}, {13, 2531u, 11351u}, {13, 995u, 11364u},
    {13, 19u, 11377u}, {13, 3091u, 11390u}, {13, 2579u, 11403u}, {13, 2323u, 11416u},
    {13, 403u, 11429u}, {13, 3667u, 11442u}, {13, 3283u, 11455u}, {13, 1747u, 11468u},
    {13, 2099u, 11481u}, {13, 1075u, 11494u}, {13, 3379u, 11507u}, {13, 179u, 11520u},
    {13, 3251u, 11533u}, {13, 1715u, 11546u}, {13, 2675u, 11559u}, {13, 1651u, 11572u},
    {13, 2419u, 11585u}, {13, 3827u, 11598u}, {13, 3571u, 11611u}, {13, 2035u, 11624u},
    {13, 3083u, 11637u}, {13, 651u, 11650u}, {13, 3723u, 11663u}, {13, 1931u, 11676u},
    {13, 331u, 11689u}, {13, 1867u, 11702u}, {13, 203u, 11715u}, {13, 3275u, 11728u},
    {13, 2507u, 11741u}, {13, 1483u, 11754u}, {13, 555u, 11767u}, {13, 939u, 11780u},
    {13, 4011u, 11793u}, {13, 1643u, 11806u}, {13, 2411u, 11819u}, {13, 1387u, 11832u},
    {13, 3947u, 11845u}, {13, 1259u, 11858u}, {13, 747u, 11871u}, {13, 3051u, 11884u},
    {13, 283u, 11897u}, {13, 2715u, 11910u}, {13, 1691u, 11923u}, {13, 1435u, 11936u},
    {13, 3995u, 11949u}, {13, 2395u, 11962u}, {13, 859u, 11975u}, {13, 2267u, 11988u},
    {13, 1243u, 12001u}, {13, 3803u, 12014u}, {13, 475u, 12027u}, {13, 3547u, 12040u},
    {13, 2619u, 12053u}, {13, 827u, 12066u}, {13, 1211u, 12079u}, {13, 699u, 12092u},
    {13, 3515u, 12105u}, {13, 3003u, 12118u}, {13, 379u, 12131u}, {13, 3323u, 12144u},
    {13, 2555u, 12157u}, {13, 4091u, 12170u}, {13, 1543u, 12183u}, {13, 2311u, 12196u},
    {13, 1287u, 12209u}, {13, 3847u, 12222u}, {13, 2183u, 12235u}, {13, 1159u, 12248u},
    {13, 2951u, 12261u}, {13, 3655u, 12274u}, {13, 1863u, 12287u}, {13, 1735u, 12300u},
    {13, 2087u, 12313u}, {13, 3623u, 12326u}, {13, 1831u, 12339u}, {13, 3239u, 12352u},
    {13, 2727u, 12365u}, {13, 935u, 12378u}, {13, 3175u, 12391u}, {13, 743u, 12404u},
    {13, 3047u, 12417u}, {13, 2023u, 12430u}, {13, 2071u, 12443u}, {13, 3351u, 12456u},
    {13, 2839u, 12469u}, {13, 151u, 12482u}, {13, 1687u, 12495u}, {13, 2455u, 12508u},
    {13, 1431u, 12521u}, {13, 87u, 12534u}, {13, 1623u, 12547u}, {13, 1239u, 12560u},
    {13, 727u, 12573u}, {13, 2007u, 12586u}, {13, 55u, 12599u}, {13, 1335u, 12612u},
    {13, 439u, 12625u}, {13, 3511u, 12638u}, {13, 2167u, 12651u}, {13, 375u, 12664u},
    {13, 2935u, 12677u}, {13, 3319u, 12690u}, {13, 2807u, 12703u}, {13, 1015u, 12716u},
    {13, 1039u, 12729u}, {13, 527u, 12742u}, {13, 3599u, 12755u}, {13, 2831u, 12768u},
    {13, 2703u, 12781u}, {13, 3983u, 12794u}, {13, 79u, 12807u}, {13, 2383u, 12820u},
    {13, 1231u, 12833u}, {13, 719u, 12846u}, {13, 2607u, 12859u}, {13, 2223u, 12872u},
    {13, 1967u, 12885u}, {13, 1135u, 12898u}, {13, 3439u, 12911u}, {13, 1903u, 12924u},
    {13, 239u, 12937u}, {13, 1007u, 12950u}, {13, 1567u, 12963u}, {13, 799u, 12976u},
    {13, 3871u, 12989u}, {13, 1183u, 13002u}, {13, 3487u, 13015u}, {13, 1951u, 13028u},
    {13, 2143u, 13041u}, {13, 1119u, 13054u}, {13, 607u, 13067u}, {13, 351u, 13080u},
    {13, 3423u, 13093u}, {13, 223u, 13106u}, {13, 2111u, 13119u}, {13, 575u, 13132u},
    {13, 319u, 13145u}, {13, 2751u, 13158u}, {13, 1471u, 13171u}, {13, 2303u, 13184u},
    {13, 3583u, 13197u}, {13, 2047u, 13210u}, {14, 5376u, 13223u}, {14, 1792u, 13237u},
    {14, 4736u, 13251u}, {14, 7808u, 13265u}, {14, 6016u, 13279u}, {14, 1344u, 13293u},
    {14, 7488u, 13307u}, {14, 5952u, 13321u}, {14, 3904u, 13335u}, {14, 7360u, 13349u},
    {14, 5568u, 13363u}, {14, 5056u, 13377u}, {14, 3104u, 13391u}, {14, 4640u, 13405u},
    {14, 5920u, 13419u}, {14, 4256u, 13433u}, {14, 5728u, 13447u}, {14, 3680u, 13461u},
    {14, 6496u, 13475u}, {14, 3424u, 13489u}, {14, 2912u, 13503u}, {14, 2784u, 13517u},
    {14, 1760u, 13531u}, {14, 992u, 13545u}, {14, 3088u, 13559u}, {14, 6800u, 13573u},
    {14, 400u, 13587u}, {14, 8080u, 13601u}, {14, 2128u, 13615u}, {14, 3664u, 13629u},
    {14, 6352u, 13643u}, {14, 5328u, 13657u}, {14, 3280u, 13671u}, {14, 4560u, 13685u},
    {14, 1488u, 13699u}, {14, 7632u, 13713u}, {14, 1072u, 13727u}, {14, 304u, 13741u},
    {14, 7984u, 13755u}, {14, 4016u, 13769u}, {14, 6256u, 13783u}, {14, 2672u, 13797u},
    {14, 7536u, 13811u}, {14, 1264u, 13825u}, {14, 5616u, 13839u}, {14, 3568u, 13853u},
    {14, 5128u, 13867u}, {14, 4232u, 13881u}, {14, 5000u, 13895u}, {14, 4808u, 13909u},
    {14, 2760u, 13923u}, {14, 7880u, 13937u}, {14, 4552u, 13951u}, {14, 6088u, 13965u},
    {14, 5416u, 13979u}, {14, 1832u, 13993u}, {14, 1704u, 14007u}, {14, 7592u, 14021u},
    {14, 1640u, 14035u}, {14, 7784u, 14049u}, {14, 2408u, 14063u}, {14, 7016u, 14077u},
    {14, 2280u, 14091u}, {14, 6888u, 14105u}, {14, 6632u, 14119u}, {14, 5096u, 14133u},
    {14, 8168u, 14147u}, {14, 7192u, 14161u}, {14, 3608u, 14175u}, {14, 6424u, 14189u},
    {14, 2840u, 14203u}, {14, 6296u, 14217u}, {14, 1688u, 14231u}, {14, 4504u, 14245u},
    {14, 920u, 14259u}, {14, 6040u, 14273u}, {14, 2392u, 14287u}, {14, 2264u, 14301u},
    {14, 7384u, 14315u}, {14, 5848u, 14329u}, {14, 824u, 14343u}, {14, 7352u, 14357u},
    {14, 8120u, 14371u}, {14, 6520u, 14385u}, {14, 248u, 14399u}, {14, 2552u, 14413u},
    {14, 1528u, 14427u}, {14, 7672u, 14441u}, {14, 4612u, 14455u},
};

inline constexpr std::uint32_t kSobolMInit[14469] = {
    1, 1, 3, 1, 3, 1, 1, 1, 1, 1, 1, 3, 3, 1, 3, 5,
    13, 1, 1, 5, 5, 17, 1, 1, 5, 5, 5, 1, 1, 7, 11, 19,
    1, 1, 5, 1, 1, 1, 1, 1, 3, 11, 1, 3, 5, 5, 31, 1,
    3, 3, 9, 7, 49, 1, 1, 1, 15, 21, 21, 1, 3, 1, 13, 27,
    49, 1, 1, 1, 15, 7, 5, 1, 3, 1, 15, 13, 25, 1, 1, 5,
    5, 19, 61, 1, 3, 7, 11, 23, 15, 103, 1, 3, 7, 13, 13, 15,
    69, 1, 1, 3, 13, 7, 35, 63, 1, 3, 5, 9, 1, 25, 53, 1,
    3, 1, 13, 9, 35, 107, 1, 3, 1, 5, 27, 61, 31, 1, 1, 5,
    11, 19, 41, 61, 1, 3, 5, 3, 3, 13, 69, 1, 1, 7, 13, 1,
    19, 1, 1, 3, 7, 5, 13, 19, 59, 1, 1, 3, 9, 25, 29, 41,
    1, 3, 5, 13, 23, 1, 55, 1, 3, 7, 3, 13, 59, 17, 1, 3,
    1, 3, 5, 53, 69, 1, 1, 5, 5, 23, 33, 13, 1, 1, 7, 7,
    1, 61, 123, 1, 1, 7, 9, 13, 61, 49, 1, 3, 3, 5, 3, 55,
    33, 1, 3, 1, 15, 31, 13, 49, 245, 1, 3, 5, 15, 31, 59, 63,
    97, 1, 3, 1, 11, 11, 11, 77, 249, 1, 3, 1, 11, 27, 43, 71,
    9, 1, 1, 7, 15, 21, 11, 81, 45, 1, 3, 7, 3, 25, 31, 65,
    79, 1, 3, 1, 1, 19, 11, 3, 205, 1, 1, 5, 9, 19, 21, 29,
    157, 1, 3, 7, 11, 1, 33, 89, 185, 1, 3, 3, 3, 15, 9, 79,
    71, 1, 3, 7, 11, 15, 39, 119, 27, 1, 1, 3, 1, 11, 31, 97,
    225, 1, 1, 1, 3, 23, 43, 57, 177, 1, 3, 7, 7, 17, 17, 37,
    71, 1, 3, 1, 5, 27, 63, 123, 213, 1, 1, 3, 5, 11, 43, 53,
    133, 1, 3, 5, 5, 29, 17, 47, 173, 479, 1, 3, 3, 11, 3, 1,
    109, 9, 69, 1, 1, 1, 5, 17, 39, 23, 5, 343, 1, 3, 1, 5,
    25, 15, 31, 103, 499, 1, 1, 1, 11, 11, 17, 63, 105, 183, 1, 1,
    5, 11, 9, 29, 97, 231, 363, 1, 1, 5, 15, 19, 45, 41, 7, 383,
    1, 3, 7, 7, 31, 19, 83, 137, 221, 1, 1, 1, 3, 23, 15, 111,
    223, 83, 1, 1, 5, 13, 31, 15, 55, 25, 161, 1, 1, 3, 13, 25,
    47, 39, 87, 257, 1, 1, 1, 11, 21, 53, 125, 249, 293, 1, 1, 7,
    11, 11, 7, 57, 79, 323, 1, 1, 5, 5, 17, 13, 81, 3, 131, 1,
    1, 7, 13, 23, 7, 65, 251, 475, 1, 3, 5, 1, 9, 43, 3, 149,
    11, 1, 1, 3, 13, 31, 13, 13, 255, 487, 1, 3, 3, 1, 5, 63,
    89, 91, 127, 1, 1, 3, 3, 1, 19, 123, 127, 237, 1, 1, 5, 7,
    23, 31, 37, 243, 289, 1, 1, 5, 11, 17, 53, 117, 183, 491, 1, 1,
    1, 5, 1, 13, 13, 209, 345, 1, 1, 3, 15, 1, 57, 115, 7, 33,
    1, 3, 1, 11, 7, 43, 81, 207, 175, 1, 3, 1, 1, 15, 27, 63,
    255, 49, 1, 3, 5, 3, 27, 61, 105, 171, 305, 1, 1, 5, 3, 1,
    3, 57, 249, 149, 1, 1, 3, 5, 5, 57, 15, 13, 159, 1, 1, 1,
    11, 7, 11, 105, 141, 225, 1, 3, 3, 5, 27, 59, 121, 101, 271, 1,
    3, 5, 9, 11, 49, 51, 59, 115, 1, 1, 7, 1, 23, 45, 125, 71,
    419, 1, 1, 3, 5, 23, 5, 105, 109, 75, 1, 1, 7, 15, 7, 11,
    67, 121, 453, 1, 3, 7, 3, 9, 13, 31, 27, 449, 1, 3, 1, 15,
    19, 39, 39, 89, 15, 1, 1, 1, 1, 1, 33, 73, 145, 379, 1, 3,
    1, 15, 15, 43, 29, 13, 483, 1, 1, 7, 3, 19, 27, 85, 131, 431,
    1, 3, 3, 3, 5, 35, 23, 195, 349, 1, 3, 3, 7, 9, 27, 39,
    59, 297, 1, 1, 3, 9, 11, 17, 13, 241, 157, 1, 3, 7, 15, 25,
    57, 33, 189, 213, 1, 1, 7, 1, 9, 55, 73, 83, 217, 1, 3, 3,
    13, 19, 27, 23, 113, 249, 1, 3, 5, 3, 23, 43, 3, 253, 479, 1,
    1, 5, 5, 11, 5, 45, 117, 217, 1, 3, 3, 7, 29, 37, 33, 123,
    147, 1, 3, 1, 15, 5, 5, 37, 227, 223, 459, 1, 1, 7, 5, 5,
    39, 63, 255, 135, 487, 1, 3, 1, 7, 9, 7, 87, 249, 217, 599, 1,
    1, 3, 13, 9, 47, 7, 225, 363, 247, 1, 3, 7, 13, 19, 13, 9,
    67, 9, 737, 1, 3, 5, 5, 19, 59, 7, 41, 319, 677, 1, 1, 5,
    3, 31, 63, 15, 43, 207, 789, 1, 1, 7, 9, 13, 39, 3, 47, 497,
    169, 1, 3, 1, 7, 21, 17, 97, 19, 415, 905, 1, 3, 7, 1, 3,
    31, 71, 111, 165, 127, 1, 1, 5, 11, 1, 61, 83, 119, 203, 847, 1,
    3, 3, 13, 9, 61, 19, 97, 47, 35, 1, 1, 7, 7, 15, 29, 63,
    95, 417, 469, 1, 3, 1, 9, 25, 9, 71, 57, 213, 385, 1, 3, 5,
    13, 31, 47, 101, 57, 39, 341, 1, 1, 3, 3, 31, 57, 125, 173, 365,
    551, 1, 3, 7, 1, 13, 57, 67, 157, 451, 707, 1, 1, 1, 7, 21,
    13, 105, 89, 429, 965, 1, 1, 5, 9, 17, 51, 45, 119, 157, 141, 1,
    3, 7, 7, 13, 45, 91, 9, 129, 741, 1, 3, 7, 1, 23, 57, 67,
    141, 151, 571, 1, 1, 3, 11, 17, 47, 93, 107, 375, 157, 1, 3, 3,
    5, 11, 21, 43, 51, 169, 915, 1, 1, 5, 3, 15, 55, 101, 67, 455,
    625, 1, 3, 5, 9, 1, 23, 29, 47, 345, 595, 1, 3, 7, 7, 5,
    49, 29, 155, 323, 589, 1, 3, 3, 7, 5, 41, 127, 61, 261, 717, 1,
    3, 7, 7, 17, 23, 117, 67, 129, 1009, 1, 1, 3, 13, 11, 39, 21,
    207, 123, 305, 1, 1, 3, 9, 29, 3, 95, 47, 231, 73, 1, 3, 1,
    9, 1, 29, 117, 21, 441, 259, 1, 3, 1, 13, 21, 39, 125, 211, 439,
    723, 1, 1, 7, 3, 17, 63, 115, 89, 49, 773, 1, 3, 7, 13, 11,
    33, 101, 107, 63, 73, 1, 1, 5, 5, 13, 57, 63, 135, 437, 177, 1,
    1, 3, 7, 27, 63, 93, 47, 417, 483, 1, 1, 3, 1, 23, 29, 1,
    191, 49, 23, 1, 1, 3, 15, 25, 55, 9, 101, 219, 607, 1, 3, 1,
    7, 7, 19, 51, 251, 393, 307, 1, 3, 3, 3, 25, 55, 17, 75, 337,
    3, 1, 1, 1, 13, 25, 17, 65, 45, 479, 413, 1, 1, 7, 7, 27,
    49, 99, 161, 213, 727, 1, 3, 5, 1, 23, 5, 43, 41, 251, 857, 1,
    3, 3, 7, 11, 61, 39, 87, 383, 835, 1, 1, 3, 15, 13, 7, 29,
    7, 505, 923, 1, 3, 7, 1, 5, 31, 47, 157, 445, 501, 1, 1, 3,
    7, 1, 43, 9, 147, 115, 605, 1, 3, 3, 13, 5, 1, 119, 211, 455,
    1001, 1, 1, 3, 5, 13, 19, 3, 243, 75, 843, 1, 3, 7, 7, 1,
    19, 91, 249, 357, 589, 1, 1, 1, 9, 1, 25, 109, 197, 279, 411, 1,
    3, 1, 15, 23, 57, 59, 135, 191, 75, 1, 1, 5, 15, 29, 21, 39,
    253, 383, 349, 1, 3, 3, 5, 19, 45, 61, 151, 199, 981, 1, 3, 5,
    13, 9, 61, 107, 141, 141, 1, 1, 3, 1, 11, 27, 25, 85, 105, 309,
    979, 1, 3, 3, 11, 19, 7, 115, 223, 349, 43, 1, 1, 7, 9, 21,
    39, 123, 21, 275, 927, 1, 1, 7, 13, 15, 41, 47, 243, 303, 437, 1,
    1, 1, 7, 7, 3, 15, 99, 409, 719, 1, 3, 3, 15, 27, 49, 113,
    123, 113, 67, 469, 1, 3, 7, 11, 3, 23, 87, 169, 119, 483, 199, 1,
    1, 5, 15, 7, 17, 109, 229, 179, 213, 741, 1, 1, 5, 13, 11, 17,
    25, 135, 403, 557, 1433, 1, 3, 1, 1, 1, 61, 67, 215, 189, 945, 1243,
    1, 1, 7, 13, 17, 33, 9, 221, 429, 217, 1679, 1, 1, 3, 11, 27,
    3, 15, 93, 93, 865, 1049, 1, 3, 7, 7, 25, 41, 121, 35, 373, 379,
    1547, 1, 3, 3, 9, 11, 35, 45, 205, 241, 9, 59, 1, 3, 1, 7,
    3, 51, 7, 177, 53, 975, 89, 1, 1, 3, 5, 27, 1, 113, 231, 299,
    759, 861, 1, 3, 3, 15, 25, 29, 5, 255, 139, 891, 2031, 1, 3, 1,
    1, 13, 9, 109, 193, 419, 95, 17, 1, 1, 7, 9, 3, 7, 29, 41,
    135, 839, 867, 1, 1, 7, 9, 25, 49, 123, 217, 113, 909, 215, 1, 1,
    7, 3, 23, 15, 43, 133, 217, 327, 901, 1, 1, 3, 3, 13, 53, 63,
    123, 477, 711, 1387, 1, 1, 3, 15, 7, 29, 75, 119, 181, 957, 247, 1,
    1, 1, 11, 27, 25, 109, 151, 267, 99, 1461, 1, 3, 7, 15, 5, 5,
    53, 145, 11, 725, 1501, 1, 3, 7, 1, 9, 43, 71, 229, 157, 607, 1835,
    1, 3, 3, 13, 25, 1, 5, 27, 471, 349, 127, 1, 1, 1, 1, 23,
    37, 9, 221, 269, 897, 1685, 1, 1, 3, 3, 31, 29, 51, 19, 311, 553,
    1969, 1, 3, 7, 5, 5, 55, 17, 39, 475, 671, 1529, 1, 1, 7, 1,
    1, 35, 47, 27, 437, 395, 1635, 1, 1, 7, 3, 13, 23, 43, 135, 327,
    139, 389, 1, 3, 7, 3, 9, 25, 91, 25, 429, 219, 513, 1, 1, 3,
    5, 13, 29, 119, 201, 277, 157, 2043, 1, 3, 5, 3, 29, 57, 13, 17,
    167, 739, 1031, 1, 3, 3, 5, 29, 21, 95, 27, 255, 679, 1531, 1, 3,
    7, 15, 9, 5, 21, 71, 61, 961, 1201, 1, 3, 5, 13, 15, 57, 33,
    93, 459, 867, 223, 1, 1, 1, 15, 17, 43, 127, 191, 67, 177, 1073, 1,
    1, 1, 15, 23, 7, 21, 199, 75, 293, 1611, 1, 3, 7, 13, 15, 39,
    21, 149, 65, 741, 319, 1, 3, 7, 11, 23, 13, 101, 89, 277, 519, 711,
    1, 3, 7, 15, 19, 27, 85, 203, 441, 97, 1895, 1, 3, 1, 3, 29,
    25, 21, 155, 11, 191, 197, 1, 1, 7, 5, 27, 11, 81, 101, 457, 675,
    1687, 1, 3, 1, 5, 25, 5, 65, 193, 41, 567, 781, 1, 3, 1, 5,
    11, 15, 113, 77, 411, 695, 1111, 1, 1, 3, 9, 11, 53, 119, 171, 55,
    297, 509, 1, 1, 1, 1, 11, 39, 113, 139, 165, 347, 595, 1, 3, 7,
    11, 9, 17, 101, 13, 81, 325, 1733, 1, 3, 1, 1, 21, 43, 115, 9,
    113, 907, 645, 1, 1, 7, 3, 9, 25, 117, 197, 159, 471, 475, 1, 3,
    1, 9, 11, 21, 57, 207, 485, 613, 1661, 1, 1, 7, 7, 27, 55, 49,
    223, 89, 85, 1523, 1, 1, 5, 3, 19, 41, 45, 51, 447, 299, 1355, 1,
    3, 1, 13, 1, 33, 117, 143, 313, 187, 1073, 1, 1, 7, 7, 5, 11,
    65, 97, 377, 377, 1501, 1, 3, 1, 1, 21, 35, 95, 65, 99, 23, 1239,
    1, 1, 5, 9, 3, 37, 95, 167, 115, 425, 867, 1, 3, 3, 13, 1,
    37, 27, 189, 81, 679, 773, 1, 1, 3, 11, 1, 61, 99, 233, 429, 969,
    49, 1, 1, 1, 7, 25, 63, 99, 165, 245, 793, 1143, 1, 1, 5, 11,
    11, 43, 55, 65, 71, 283, 273, 1, 1, 5, 5, 9, 3, 101, 251, 355,
    379, 1611, 1, 1, 1, 15, 21, 63, 85, 99, 49, 749, 1335, 1, 1, 5,
    13, 27, 9, 121, 43, 255, 715, 289, 1, 3, 1, 5, 27, 19, 17, 223,
    77, 571, 1415, 1, 1, 5, 3, 13, 59, 125, 251, 195, 551, 1737, 1, 3,
    3, 15, 13, 27, 49, 105, 389, 971, 755, 1, 3, 5, 15, 23, 43, 35,
    107, 447, 763, 253, 1, 3, 5, 11, 21, 3, 17, 39, 497, 407, 611, 1,
    1, 7, 13, 15, 31, 113, 17, 23, 507, 1995, 1, 1, 7, 15, 3, 15,
    31, 153, 423, 79, 503, 1, 1, 7, 9, 19, 25, 23, 171, 505, 923, 1989,
    1, 1, 5, 9, 21, 27, 121, 223, 133, 87, 697, 1, 1, 5, 5, 9,
    19, 107, 99, 319, 765, 1461, 1, 1, 3, 3, 19, 25, 3, 101, 171, 729,
    187, 1, 1, 3, 1, 13, 23, 85, 93, 291, 209, 37, 1, 1, 1, 15,
    25, 25, 77, 253, 333, 947, 1073, 1, 1, 3, 9, 17, 29, 55, 47, 255,
    305, 2037, 1, 3, 3, 9, 29, 63, 9, 103, 489, 939, 1523, 1, 3, 7,
    15, 7, 31, 89, 175, 369, 339, 595, 1, 3, 7, 13, 25, 5, 71, 207,
    251, 367, 665, 1, 3, 3, 3, 21, 25, 75, 35, 31, 321, 1603, 1, 1,
    1, 9, 11, 1, 65, 5, 11, 329, 535, 1, 1, 5, 3, 19, 13, 17,
    43, 379, 485, 383, 1, 3, 5, 13, 13, 9, 85, 147, 489, 787, 1133, 1,
    3, 1, 1, 5, 51, 37, 129, 195, 297, 1783, 1, 1, 3, 15, 19, 57,
    59, 181, 455, 697, 2033, 1, 3, 7, 1, 27, 9, 65, 145, 325, 189, 201,
    1, 3, 1, 15, 31, 23, 19, 5, 485, 581, 539, 1, 1, 7, 13, 11,
    15, 65, 83, 185, 847, 831, 1, 3, 5, 7, 7, 55, 73, 15, 303, 511,
    1905, 1, 3, 5, 9, 7, 21, 45, 15, 397, 385, 597, 1, 3, 7, 3,
    23, 13, 73, 221, 511, 883, 1265, 1, 1, 3, 11, 1, 51, 73, 185, 33,
    975, 1441, 1, 3, 3, 9, 19, 59, 21, 39, 339, 37, 143, 1, 1, 7,
    1, 31, 33, 19, 167, 117, 635, 639, 1, 1, 1, 3, 5, 13, 59, 83,
    355, 349, 1967, 1, 1, 1, 5, 19, 3, 53, 133, 97, 863, 983, 1, 3,
    1, 13, 9, 41, 91, 105, 173, 97, 625, 1, 1, 5, 3, 7, 49, 115,
    133, 71, 231, 1063, 1, 1, 7, 5, 17, 43, 47, 45, 497, 547, 757, 1,
    3, 5, 15, 21, 61, 123, 191, 249, 31, 631, 1, 3, 7, 9, 17, 7,
    11, 185, 127, 169, 1951, 1, 1, 5, 13, 11, 11, 9, 49, 29, 125, 791,
    1, 1, 1, 15, 31, 41, 13, 167, 273, 429, 57, 1, 3, 5, 3, 27,
    7, 35, 209, 65, 265, 1393, 1, 3, 1, 13, 31, 19, 53, 143, 135, 9,
    1021, 1, 1, 7, 13, 31, 5, 115, 153, 143, 957, 623, 1, 1, 5, 11,
    25, 19, 29, 31, 297, 943, 443, 1, 3, 3, 5, 21, 11, 127, 81, 479,
    25, 699, 1, 1, 3, 11, 25, 31, 97, 19, 195, 781, 705, 1, 1, 5,
    5, 31, 11, 75, 207, 197, 885, 2037, 1, 1, 1, 11, 9, 23, 29, 231,
    307, 17, 1497, 1, 1, 5, 11, 11, 43, 111, 233, 307, 523, 1259, 1, 1,
    7, 5, 1, 21, 107, 229, 343, 933, 217, 1, 1, 1, 11, 3, 21, 125,
    131, 405, 599, 1469, 1, 3, 5, 5, 9, 39, 33, 81, 389, 151, 811, 1,
    1, 7, 7, 7, 1, 59, 223, 265, 529, 2021, 1, 3, 1, 3, 9, 23,
    85, 181, 47, 265, 49, 1, 3, 5, 11, 19, 23, 9, 7, 157, 299, 1983,
    1, 3, 1, 5, 15, 5, 21, 105, 29, 339, 1041, 1, 1, 1, 1, 5,
    33, 65, 85, 111, 705, 479, 1, 1, 1, 7, 9, 35, 77, 87, 151, 321,
    101, 1, 1, 5, 7, 17, 1, 51, 197, 175, 811, 1229, 1, 3, 3, 15,
    23, 37, 85, 185, 239, 543, 731, 1, 3, 1, 7, 7, 55, 111, 109, 289,
    439, 243, 1, 1, 7, 11, 17, 53, 35, 217, 259, 853, 1667, 1, 3, 1,
    9, 1, 63, 87, 17, 73, 565, 1091, 1, 1, 3, 3, 11, 41, 1, 57,
    295, 263, 1029, 1, 1, 5, 1, 27, 45, 109, 161, 411, 421, 1395, 1, 3,
    5, 11, 25, 35, 47, 191, 339, 417, 1727, 1, 1, 5, 15, 21, 1, 93,
    251, 351, 217, 1767, 1, 3, 3, 11, 3, 7, 75, 155, 313, 211, 491, 1,
    3, 3, 5, 11, 9, 101, 161, 453, 913, 1067, 1, 1, 3, 1, 15, 45,
    127, 141, 163, 727, 1597, 1, 3, 3, 7, 1, 33, 63, 73, 73, 341, 1691,
    1, 3, 5, 13, 15, 39, 53, 235, 77, 99, 949, 1, 1, 5, 13, 31,
    17, 97, 13, 215, 301, 1927, 1, 1, 7, 1, 1, 37, 91, 93, 441, 251,
    1131, 1, 3, 7, 9, 25, 5, 105, 69, 81, 943, 1459, 1, 3, 7, 11,
    31, 43, 13, 209, 27, 1017, 501, 1, 1, 7, 15, 1, 33, 31, 233, 161,
    507, 387, 1, 3, 3, 5, 5, 53, 33, 177, 503, 627, 1927, 1, 1, 7,
    11, 7, 61, 119, 31, 457, 229, 1875, 1, 1, 5, 15, 19, 5, 53, 201,
    157, 885, 1057, 1, 3, 7, 9, 1, 35, 51, 113, 249, 425, 1009, 1, 3,
    5, 7, 21, 53, 37, 155, 119, 345, 631, 1, 3, 5, 7, 15, 31, 109,
    69, 503, 595, 1879, 1, 3, 3, 1, 25, 35, 65, 131, 403, 705, 503, 1,
    3, 7, 7, 19, 33, 11, 153, 45, 633, 499, 1, 3, 3, 5, 11, 3,
    29, 93, 487, 33, 703, 1, 1, 3, 15, 21, 53, 107, 179, 387, 927, 1757,
    1, 1, 3, 7, 21, 45, 51, 147, 175, 317, 361, 1, 1, 1, 7, 7,
    13, 15, 243, 269, 795, 1965, 1, 1, 3, 5, 19, 33, 57, 115, 443, 537,
    627, 1, 3, 3, 9, 3, 39, 25, 61, 185, 717, 1049, 1, 3, 7, 3,
    7, 37, 107, 153, 7, 269, 1581, 1, 1, 7, 3, 7, 41, 91, 41, 145,
    489, 1245, 1, 1, 5, 9, 7, 7, 105, 81, 403, 407, 283, 1, 1, 7,
    9, 27, 55, 29, 77, 193, 963, 949, 1, 1, 5, 3, 25, 51, 107, 63,
    403, 917, 815, 1, 1, 7, 3, 7, 61, 19, 51, 457, 599, 535, 1, 3,
    7, 1, 23, 51, 105, 153, 239, 215, 1847, 1, 1, 3, 5, 27, 23, 79,
    49, 495, 45, 1935, 1, 1, 1, 11, 11, 47, 55, 133, 495, 999, 1461, 1,
    1, 3, 15, 27, 51, 93, 17, 355, 763, 1675, 1, 3, 1, 3, 1, 3,
    79, 119, 499, 17, 995, 1, 1, 1, 1, 15, 43, 45, 17, 167, 973, 799,
    1, 1, 1, 3, 27, 49, 89, 29, 483, 913, 2023, 1, 1, 3, 3, 5,
    11, 75, 7, 41, 851, 611, 1, 3, 1, 3, 7, 57, 39, 123, 257, 283,
    507, 1, 3, 3, 11, 27, 23, 113, 229, 187, 299, 133, 1, 1, 3, 13,
    9, 63, 101, 77, 451, 169, 337, 1, 3, 7, 3, 3, 59, 45, 195, 229,
    415, 409, 1, 3, 5, 3, 11, 19, 71, 93, 43, 857, 369, 1, 3, 7,
    9, 19, 33, 115, 19, 241, 703, 247, 1, 3, 5, 11, 5, 35, 21, 155,
    463, 1005, 1073, 1, 3, 7, 3, 25, 15, 109, 83, 93, 69, 1189, 1, 3,
    5, 7, 5, 21, 93, 133, 135, 167, 903, 1, 1, 7, 7, 3, 59, 121,
    161, 285, 815, 1769, 3705, 1, 3, 1, 1, 3, 47, 103, 171, 381, 609, 185,
    373, 1, 3, 3, 15, 23, 33, 107, 131, 441, 445, 689, 2059, 1, 3, 3,
    11, 7, 53, 101, 167, 435, 803, 1255, 3781, 1, 1, 5, 11, 15, 59, 41,
    19, 135, 835, 1263, 505, 1, 1, 7, 11, 21, 49, 23, 219, 127, 961, 1065,
    385, 1, 3, 5, 15, 7, 47, 117, 217, 45, 731, 1639, 733, 1, 1, 7,
    11, 27, 57, 91, 87, 81, 35, 1269, 1007, 1, 1, 3, 11, 15, 37, 53,
    219, 193, 937, 1899, 3733, 1, 3, 5, 3, 13, 11, 27, 19, 199, 393, 965,
    2195, 1, 3, 1, 3, 5, 1, 37, 173, 413, 1023, 553, 409, 1, 3, 1,
    7, 15, 29, 123, 95, 255, 373, 1799, 3841, 1, 3, 5, 13, 21, 57, 51,
    17, 511, 195, 1157, 1831, 1, 1, 1, 15, 29, 19, 7, 73, 295, 519, 587,
    3523, 1, 1, 5, 13, 13, 35, 115, 191, 123, 535, 717, 1661, 1, 3, 3,
    5, 23, 21, 47, 251, 379, 921, 1119, 297, 1, 3, 3, 9, 29, 53, 121,
    201, 135, 193, 523, 2943, 1, 1, 1, 7, 29, 45, 125, 9, 99, 867, 425,
    601, 1, 3, 1, 9, 13, 15, 67, 181, 109, 293, 1305, 3079, 1, 3, 3,
    9, 5, 35, 15, 209, 305, 87, 767, 2795, 1, 3, 3, 11, 27, 57, 113,
    123, 179, 643, 149, 523, 1, 1, 3, 15, 11, 17, 67, 223, 63, 657, 335,
    3309, 1, 1, 1, 9, 25, 29, 109, 159, 39, 513, 571, 1761, 1, 1, 3,
    1, 5, 63, 75, 19, 455, 601, 123, 691, 1, 1, 1, 3, 21, 5, 45,
    169, 377, 513, 1951, 2565, 1, 1, 3, 11, 3, 33, 119, 69, 253, 907, 805,
    1449, 1, 1, 5, 13, 31, 15, 17, 7, 499, 61, 687, 1867, 1, 3, 7,
    11, 17, 33, 73, 77, 299, 243, 641, 2345, 1, 1, 7, 11, 9, 35, 31,
    235, 359, 647, 379, 1161, 1, 3, 3, 15, 31, 25, 5, 67, 33, 45, 437,
    4067, 1, 1, 3, 11, 7, 17, 37, 87, 333, 253, 1517, 2921, 1, 1, 7,
    15, 7, 15, 107, 189, 153, 769, 1521, 3427, 1, 3, 5, 13, 5, 61, 113,
    37, 293, 393, 113, 43, 1, 1, 1, 15, 29, 43, 107, 31, 167, 147, 301,
    1021, 1, 1, 1, 13, 3, 1, 35, 93, 195, 181, 2027, 1491, 1, 3, 3,
    3, 13, 33, 77, 199, 153, 221, 1699, 3671, 1, 3, 5, 13, 7, 49, 123,
    155, 495, 681, 819, 809, 1, 3, 5, 15, 27, 61, 117, 189, 183, 887, 617,
    4053, 1, 1, 1, 7, 31, 59, 125, 235, 389, 369, 447, 1039, 1, 3, 5,
    1, 5, 39, 115, 89, 249, 377, 431, 3747, 1, 1, 1, 5, 7, 47, 59,
    157, 77, 445, 699, 3439, 1, 1, 3, 5, 11, 21, 19, 75, 11, 599, 1575,
    735, 1, 3, 5, 3, 19, 13, 41, 69, 199, 143, 1761, 3215, 1, 3, 5,
    7, 19, 43, 25, 41, 41, 11, 1647, 2783, 1, 3, 1, 9, 19, 45, 111,
    97, 405, 399, 457, 3219, 1, 1, 3, 1, 23, 15, 65, 121, 59, 985, 829,
    2259, 1, 1, 3, 7, 17, 13, 107, 229, 75, 551, 1299, 2363, 1, 1, 5,
    5, 21, 57, 23, 199, 509, 139, 2007, 3875, 1, 3, 1, 11, 19, 53, 15,
    229, 215, 741, 695, 823, 1, 3, 7, 1, 29, 3, 17, 163, 417, 559, 549,
    319, 1, 3, 1, 13, 17, 9, 47, 133, 365, 7, 1937, 1071, 1, 3, 5,
    7, 19, 37, 55, 163, 301, 249, 689, 2327, 1, 3, 5, 13, 11, 23, 61,
    205, 257, 377, 615, 1457, 1, 3, 5, 1, 23, 37, 13, 75, 331, 495, 579,
    3367, 1, 1, 1, 9, 1, 23, 49, 129, 475, 543, 883, 2531, 1, 3, 1,
    5, 23, 59, 51, 35, 343, 695, 219, 369, 1, 3, 3, 1, 27, 17, 63,
    97, 71, 507, 1929, 613, 1, 1, 5, 1, 21, 31, 11, 109, 247, 409, 1817,
    2173, 1, 1, 3, 15, 23, 9, 7, 209, 301, 23, 147, 1691, 1, 1, 7,
    5, 5, 19, 37, 229, 249, 277, 1115, 2309, 1, 1, 1, 5, 5, 63, 5,
    249, 285, 431, 343, 2467, 1, 1, 1, 11, 7, 45, 35, 75, 505, 537, 29,
    2919, 1, 3, 5, 15, 11, 39, 15, 63, 263, 9, 199, 445, 1, 3, 3,
    3, 27, 63, 53, 171, 227, 63, 1049, 827, 1, 1, 3, 13, 7, 11, 115,
    183, 179, 937, 1785, 381, 1, 3, 1, 11, 13, 15, 107, 81, 53, 295, 1785,
    3757, 1, 3, 3, 13, 11, 5, 109, 243, 3, 505, 323, 1373, 1, 3, 3,
    11, 21, 51, 17, 177, 381, 937, 1263, 3889, 1, 3, 5, 9, 27, 25, 85,
    193, 143, 573, 1189, 2995, 1, 3, 5, 11, 13, 9, 81, 21, 159, 953, 91,
    1751, 1, 1, 3, 3, 27, 61, 11, 253, 391, 333, 1105, 635, 1, 3, 3,
    15, 9, 57, 95, 81, 419, 735, 251, 1141, 1, 1, 5, 9, 31, 39, 59,
    13, 319, 807, 1241, 2433, 1, 3, 3, 5, 27, 13, 107, 141, 423, 937, 2027,
    3233, 1, 3, 3, 9, 9, 25, 125, 23, 443, 835, 1245, 847, 1, 1, 7,
    15, 17, 17, 83, 107, 411, 285, 847, 1571, 1, 1, 3, 13, 29, 61, 37,
    81, 349, 727, 1453, 1957, 1, 3, 7, 11, 31, 13, 59, 77, 273, 591, 1265,
    1533, 1, 1, 7, 7, 13, 17, 25, 25, 187, 329, 347, 1473, 1, 3, 7,
    7, 5, 51, 37, 99, 221, 153, 503, 2583, 1, 3, 1, 13, 19, 27, 11,
    69, 181, 479, 1183, 3229, 1, 3, 3, 13, 23, 21, 103, 147, 323, 909, 947,
    315, 1, 3, 1, 3, 23, 1, 31, 59, 93, 513, 45, 2271, 1, 3, 5,
    1, 7, 43, 109, 59, 231, 41, 1515, 2385, 1, 3, 1, 5, 31, 57, 49,
    223, 283, 1013, 11, 701, 1, 1, 5, 1, 19, 53, 55, 31, 31, 299, 495,
    693, 1, 3, 3, 9, 5, 33, 77, 253, 427, 791, 731, 1019, 1, 3, 7,
    11, 1, 9, 119, 203, 53, 877, 1707, 3499, 1, 1, 3, 7, 13, 39, 55,
    159, 423, 113, 1653, 3455, 1, 1, 3, 5, 21, 47, 51, 59, 55, 411, 931,
    251, 1, 3, 7, 3, 31, 25, 81, 115, 405, 239, 741, 455, 1, 1, 5,
    1, 31, 3, 101, 83, 479, 491, 1779, 2225, 1, 3, 3, 3, 9, 37, 107,
    161, 203, 503, 767, 3435, 1, 3, 7, 9, 1, 27, 61, 119, 233, 39, 1375,
    4089, 1, 1, 5, 9, 1, 31, 45, 51, 369, 587, 383, 2813, 1, 3, 7,
    5, 31, 7, 49, 119, 487, 591, 1627, 53, 1, 1, 7, 1, 9, 47, 1,
    223, 369, 711, 1603, 1917, 1, 3, 5, 3, 21, 37, 111, 17, 483, 739, 1193,
    2775, 1, 3, 3, 7, 17, 11, 51, 117, 455, 191, 1493, 3821, 1, 1, 5,
    9, 23, 39, 99, 181, 343, 485, 99, 1931, 1, 3, 1, 7, 29, 49, 31,
    71, 489, 527, 1763, 2909, 1, 1, 5, 11, 5, 5, 73, 189, 321, 57, 1191,
    3685, 1, 1, 5, 15, 13, 45, 125, 207, 371, 415, 315, 983, 1, 3, 3,
    5, 25, 59, 33, 31, 239, 919, 1859, 2709, 1, 3, 5, 13, 27, 61, 23,
    115, 61, 413, 1275, 3559, 1, 3, 7, 15, 5, 59, 101, 81, 47, 967, 809,
    3189, 1, 1, 5, 11, 31, 15, 39, 25, 173, 505, 809, 2677, 1, 1, 5,
    9, 19, 13, 95, 89, 511, 127, 1395, 2935, 1, 1, 5, 5, 31, 45, 9,
    57, 91, 303, 1295, 3215, 1, 3, 3, 3, 19, 15, 113, 187, 217, 489, 1285,
    1803, 1, 1, 3, 1, 13, 29, 57, 139, 255, 197, 537, 2183, 1, 3, 1,
    15, 11, 7, 53, 255, 467, 9, 757, 3167, 1, 3, 3, 15, 21, 13, 9,
    189, 359, 323, 49, 333, 1, 3, 7, 11, 7, 37, 21, 119, 401, 157, 1659,
    1069, 1, 1, 5, 7, 17, 33, 115, 229, 149, 151, 2027, 279, 1, 1, 5,
    15, 5, 49, 77, 155, 383, 385, 1985, 945, 1, 3, 7, 3, 7, 55, 85,
    41, 357, 527, 1715, 1619, 1, 1, 3, 1, 21, 45, 115, 21, 199, 967, 1581,
    3807, 1, 1, 3, 7, 21, 39, 117, 191, 169, 73, 413, 3417, 1, 1, 1,
    13, 1, 31, 57, 195, 231, 321, 367, 1027, 1, 3, 7, 3, 11, 29, 47,
    161, 71, 419, 1721, 437, 1, 1, 7, 3, 11, 9, 43, 65, 157, 1, 1851,
    823, 1, 1, 1, 5, 21, 15, 31, 101, 293, 299, 127, 1321, 1, 1, 7,
    1, 27, 1, 11, 229, 241, 705, 43, 1475, 1, 3, 7, 1, 5, 15, 73,
    183, 193, 55, 1345, 49, 1, 3, 3, 3, 19, 3, 55, 21, 169, 663, 1675,
    137, 1, 1, 1, 13, 7, 21, 69, 67, 373, 965, 1273, 2279, 1, 1, 7,
    7, 21, 23, 17, 43, 341, 845, 465, 3355, 1, 3, 5, 5, 25, 5, 81,
    101, 233, 139, 359, 2057, 1, 1, 3, 11, 15, 39, 55, 3, 471, 765, 1143,
    3941, 1, 1, 7, 15, 9, 57, 81, 79, 215, 433, 333, 3855, 1, 1, 5,
    5, 19, 45, 83, 31, 209, 363, 701, 1303, 1, 3, 7, 5, 1, 13, 55,
    163, 435, 807, 287, 2031, 1, 3, 3, 7, 3, 3, 17, 197, 39, 169, 489,
    1769, 1, 1, 3, 5, 29, 43, 87, 161, 289, 339, 1233, 2353, 1, 3, 3,
    9, 21, 9, 77, 1, 453, 167, 1643, 2227, 1, 1, 7, 1, 15, 7, 67,
    33, 193, 241, 1031, 2339, 1, 3, 1, 11, 1, 63, 45, 65, 265, 661, 849,
    1979, 1, 3, 1, 13, 19, 49, 3, 11, 159, 213, 659, 2839, 1, 3, 5,
    11, 9, 29, 27, 227, 253, 449, 1403, 3427, 1, 1, 3, 1, 7, 3, 77,
    143, 277, 779, 1499, 475, 1, 1, 1, 5, 11, 23, 87, 131, 393, 849, 193,
    3189, 1, 3, 5, 11, 3, 3, 89, 9, 449, 243, 1501, 1739, 1, 3, 1,
    9, 29, 29, 113, 15, 65, 611, 135, 3687, 1, 1, 1, 9, 21, 19, 39,
    151, 395, 501, 1339, 959, 2725, 1, 3, 7, 1, 7, 35, 45, 33, 119, 225,
    1631, 1695, 1459, 1, 1, 1, 3, 25, 55, 37, 79, 167, 907, 1075, 271, 4059,
    1, 3, 5, 13, 5, 13, 53, 165, 437, 67, 1705, 3177, 8095, 1, 3, 3,
    13, 27, 57, 95, 55, 443, 245, 1945, 1725, 1929, 1, 3, 1, 9, 5, 33,
    109, 35, 99, 827, 341, 2401, 2411, 1, 1, 5, 9, 7, 33, 43, 39, 87,
    799, 635, 3481, 7159, 1, 3, 1, 1, 31, 15, 45, 27, 337, 113, 987, 2065,
    2529, 1, 1, 5, 9, 5, 15, 105, 123, 479, 289, 1609, 2177, 4629, 1, 3,
    5, 11, 31, 47, 97, 87, 385, 195, 1041, 651, 3271, 1, 1, 3, 7, 17,
    3, 101, 55, 87, 629, 1687, 1387, 2745, 1, 3, 5, 5, 7, 21, 9, 237,
    313, 549, 1107, 117, 6183, 1, 1, 3, 9, 9, 5, 55, 201, 487, 851, 1103,
    2993, 4055, 1, 1, 5, 9, 31, 19, 59, 7, 363, 381, 1167, 2057, 5715, 1,
    3, 3, 15, 23, 63, 19, 227, 387, 827, 487, 1049, 7471, 1, 3, 1, 5,
    23, 25, 61, 245, 363, 863, 963, 3583, 6475, 1, 1, 5, 1, 5, 27, 81,
    85, 275, 49, 235, 3291, 1195, 1, 1, 5, 7, 23, 53, 85, 107, 511, 779,
    1265, 1093, 7859, 1, 3, 3, 1, 9, 21, 75, 219, 59, 485, 1739, 3845, 1109,
    1, 3, 5, 1, 13, 41, 19, 143, 293, 391, 2023, 1791, 4399, 1, 3, 7,
    15, 21, 13, 21, 195, 215, 413, 523, 2099, 2341, 1, 1, 1, 3, 29, 51,
    47, 57, 135, 575, 943, 1673, 541, 1, 3, 5, 1, 9, 13, 113, 175, 447,
    115, 657, 4077, 5973, 1, 1, 1, 11, 17, 41, 37, 95, 297, 579, 911, 2207,
    2387, 1, 3, 5, 3, 23, 11, 23, 231, 93, 667, 711, 1563, 7961, 1, 1,
    7, 3, 17, 59, 13, 181, 141, 991, 1817, 457, 1711, 1, 3, 3, 5, 31,
    59, 81, 205, 245, 537, 1049, 997, 1815, 1, 3, 7, 5, 17, 13, 9, 79,
    17, 185, 5, 2211, 6263, 1, 3, 7, 13, 7, 53, 61, 145, 13, 285, 1203,
    947, 2933, 1, 1, 7, 3, 31, 19, 69, 217, 47, 441, 1893, 673, 4451, 1,
    1, 1, 1, 25, 9, 23, 225, 385, 629, 603, 3747, 4241, 1, 3, 1, 9,
    5, 37, 31, 237, 431, 79, 1521, 459, 2523, 1, 3, 7, 3, 9, 43, 105,
    179, 5, 225, 799, 1777, 4893, 1, 1, 3, 1, 29, 45, 29, 159, 267, 247,
    455, 847, 3909, 1, 1, 3, 7, 25, 21, 121, 57, 467, 275, 719, 1521, 7319,
    1, 3, 1, 3, 11, 35, 119, 123, 81, 979, 1187, 3623, 4293, 1, 1, 1,
    7, 15, 25, 121, 235, 25, 487, 873, 1787, 1977, 1, 1, 1, 11, 3, 7,
    17, 135, 345, 353, 383, 4011, 2573, 1, 3, 7, 15, 27, 13, 97, 123, 65,
    675, 951, 1285, 6559, 1, 3, 7, 3, 7, 1, 71, 19, 325, 765, 337, 1197,
    2697, 1, 3, 5, 1, 31, 37, 11, 71, 169, 283, 83, 3801, 7083, 1, 1,
    3, 15, 17, 29, 83, 65, 275, 679, 1749, 4007, 7749, 1, 1, 3, 1, 21,
    11, 41, 95, 237, 361, 1819, 2783, 2383, 1, 3, 7, 11, 29, 57, 111, 187,
    465, 145, 605, 1987, 8109, 1, 1, 3, 3, 19, 15, 55, 83, 357, 1001, 643,
    1517, 6529, 1, 3, 1, 5, 29, 35, 73, 23, 77, 619, 1523, 1725, 8145, 1,
    1, 5, 5, 19, 23, 7, 197, 449, 337, 717, 2921, 315, 1, 3, 5, 9,
    7, 63, 117, 97, 97, 813, 1925, 2817, 1579, 1, 1, 1, 11, 31, 7, 25,
    235, 231, 133, 1007, 1371, 1553, 1, 1, 7, 5, 19, 7, 47, 171, 267, 243,
    1331, 567, 6033, 1, 1, 5, 1, 7, 49, 55, 89, 109, 735, 1455, 3193, 6239,
    1, 1, 1, 7, 1, 61, 9, 103, 3, 929, 1481, 2927, 2957, 1, 1, 5,
    13, 17, 21, 75, 49, 255, 1019, 1161, 2133, 1177, 1, 3, 1, 3, 13, 15,
    41, 247, 211, 409, 1163, 523, 2635, 1, 3, 7, 7, 21, 59, 91, 149, 479,
    391, 681, 2311, 6249, 1, 1, 5, 11, 27, 53, 21, 211, 197, 815, 719, 1605,
    255, 1, 1, 3, 3, 9, 33, 59, 3, 323, 1, 101, 1135, 8105, 1, 3,
    3, 1, 29, 5, 17, 141, 51, 991, 841, 327, 3859, 1, 3, 1, 5, 11,
    19, 23, 89, 175, 173, 165, 2881, 1881, 1, 1, 1, 15, 13, 51, 87, 39,
    495, 611, 1341, 1531, 7029, 1, 1, 3, 11, 13, 55, 75, 185, 57, 61, 1917,
    2051, 5965, 1, 1, 5, 5, 7, 53, 11, 217, 213, 933, 921, 3607, 5175, 1,
    3, 3, 5, 17, 53, 103, 251, 369, 781, 1319, 3717, 4439, 1, 3, 5, 13,
    1, 39, 25, 235, 321, 773, 251, 3111, 6397, 1, 1, 7, 3, 31, 5, 25,
    29, 325, 385, 1313, 127, 4705, 1, 1, 5, 15, 15, 27, 15, 85, 239, 243,
    1633, 3473, 2621, 1, 3, 3, 3, 9, 19, 113, 13, 137, 165, 25, 2957, 7549,
    1, 3, 1, 3, 11, 21, 3, 97, 417, 183, 1205, 1437, 247, 1, 1, 7,
    3, 17, 21, 125, 55, 67, 387, 385, 2323, 887, 1, 3, 5, 5, 29, 11,
    103, 223, 233, 641, 133, 415, 1297, 1, 3, 3, 11, 1, 9, 5, 189, 235,
    1007, 1363, 3985, 889, 1, 3, 7, 9, 23, 19, 19, 183, 269, 403, 1643, 3559,
    5189, 1, 3, 7, 3, 29, 45, 17, 69, 475, 149, 1291, 2689, 7625, 1, 3,
    7, 3, 27, 37, 41, 73, 253, 1001, 431, 1111, 7887, 1, 1, 7, 5, 3,
    7, 87, 143, 289, 495, 631, 3011, 6151, 1, 1, 1, 13, 5, 45, 17, 167,
    23, 975, 801, 1975, 6833, 1, 3, 1, 11, 7, 21, 39, 23, 213, 429, 1301,
    2059, 197, 1, 3, 3, 15, 3, 57, 121, 133, 29, 711, 1961, 2497, 189, 1,
    1, 3, 5, 11, 55, 115, 137, 233, 673, 985, 2849, 5911, 1, 1, 7, 15,
    29, 45, 1, 241, 329, 323, 925, 2821, 3331, 1, 1, 5, 7, 13, 31, 81,
    105, 199, 145, 195, 1365, 5119, 1, 3, 7, 11, 3, 55, 11, 31, 117, 343,
    1265, 1837, 2451, 1, 1, 3, 7, 29, 57, 61, 179, 429, 591, 177, 1945, 2159,
    1, 3, 5, 11, 23, 49, 101, 137, 339, 323, 1035, 1749, 7737, 1, 3, 1,
    13, 21, 35, 55, 79, 19, 269, 1055, 2651, 7083, 1, 3, 3, 11, 9, 9,
    95, 167, 437, 361, 1185, 4083, 603, 1, 1, 1, 7, 31, 61, 77, 65, 489,
    657, 691, 2423, 4147, 1, 3, 5, 7, 21, 37, 87, 191, 311, 453, 2013, 829,
    2619, 1, 1, 5, 9, 17, 47, 35, 101, 5, 813, 1157, 1279, 7365, 1, 1,
    5, 3, 11, 35, 113, 199, 369, 721, 901, 1471, 7801, 1, 3, 1, 5, 9,
    61, 83, 157, 391, 739, 1957, 2123, 4341, 1, 3, 5, 11, 19, 19, 111, 225,
    383, 219, 997, 717, 7505, 1, 3, 1, 11, 13, 63, 35, 127, 209, 831, 501,
    3017, 3507, 1, 3, 7, 9, 29, 7, 11, 163, 81, 563, 1445, 3215, 6377, 1,
    3, 7, 11, 25, 3, 39, 195, 491, 45, 839, 4021, 4899, 1, 3, 7, 15,
    13, 5, 67, 143, 117, 505, 1281, 3679, 5695, 1, 3, 7, 9, 9, 19, 21,
    221, 147, 763, 683, 2211, 589, 1, 1, 3, 5, 21, 47, 53, 109, 299, 807,
    1153, 1209, 7961, 1, 3, 7, 11, 9, 31, 45, 43, 505, 647, 1127, 2681, 4917,
    1, 1, 5, 15, 31, 41, 63, 113, 399, 727, 673, 2587, 5259, 1, 1, 1,
    13, 17, 53, 35, 99, 57, 243, 1447, 1919, 2831, 1, 3, 7, 11, 23, 51,
    13, 9, 49, 449, 997, 3073, 4407, 1, 3, 5, 7, 23, 33, 89, 41, 415,
    53, 697, 1113, 1489, 1, 1, 3, 7, 1, 13, 29, 13, 255, 749, 77, 3463,
    1761, 1, 3, 3, 7, 13, 15, 93, 191, 309, 869, 739, 1041, 3053, 1, 3,
    5, 13, 5, 19, 109, 211, 347, 839, 893, 2947, 7735, 1, 3, 1, 13, 27,
    3, 119, 157, 485, 99, 1703, 3895, 573, 1, 3, 7, 11, 1, 23, 123, 105,
    31, 359, 275, 1775, 3685, 1, 3, 3, 5, 27, 11, 125, 3, 413, 199, 2043,
    2895, 2945, 1, 3, 3, 3, 15, 49, 121, 159, 233, 543, 193, 4007, 321, 1,
    1, 3, 5, 9, 47, 87, 1, 51, 1011, 1595, 2239, 6467, 1, 3, 7, 9,
    1, 33, 87, 137, 469, 749, 1413, 805, 6817, 1, 3, 1, 13, 19, 45, 95,
    227, 29, 677, 1275, 3395, 4451, 1, 1, 7, 5, 7, 63, 33, 71, 443, 561,
    1311, 3069, 6943, 1, 1, 1, 13, 9, 37, 23, 69, 13, 415, 1479, 1197, 861,
    1, 3, 3, 13, 27, 21, 13, 233, 105, 777, 345, 2443, 1105, 1, 1, 7,
    11, 23, 13, 21, 147, 221, 549, 73, 2729, 6279, 1, 1, 7, 7, 25, 27,
    15, 45, 227, 39, 75, 1191, 3563, 1, 1, 5, 7, 13, 49, 99, 167, 227,
    13, 353, 1047, 8075, 1, 1, 3, 13, 31, 9, 27, 7, 461, 737, 1559, 3243,
    53, 1, 3, 1, 1, 21, 41, 97, 165, 171, 821, 587, 2137, 2293, 1, 3,
    1, 11, 17, 41, 29, 187, 87, 599, 1467, 1395, 5931, 1, 1, 1, 9, 9,
    49, 89, 205, 409, 453, 61, 1923, 1257, 1, 3, 7, 3, 9, 43, 89, 143,
    431, 83, 1243, 1795, 3599, 1, 3, 5, 13, 3, 25, 59, 219, 43, 223, 797,
    2651, 6015, 1, 1, 5, 15, 7, 55, 65, 207, 213, 311, 1287, 1269, 6467, 1,
    3, 7, 11, 21, 57, 31, 183, 351, 857, 911, 1683, 7155, 1, 3, 5, 11,
    27, 1, 21, 47, 387, 383, 1593, 115, 3805, 1, 3, 1, 1, 13, 23, 87,
    173, 181, 619, 1653, 3931, 6073, 1, 1, 7, 5, 17, 43, 37, 61, 307, 621,
    1785, 55, 115, 1, 3, 7, 15, 25, 61, 123, 15, 237, 671, 1473, 467, 1907,
    1, 1, 7, 5, 29, 57, 75, 237, 85, 699, 159, 3577, 4771, 1, 1, 1,
    11, 25, 19, 51, 1, 147, 31, 895, 2617, 625, 1, 3, 7, 5, 29, 15,
    115, 175, 395, 391, 1141, 1827, 1181, 1, 3, 5, 7, 17, 7, 11, 193, 89,
    243, 561, 3787, 4551, 1, 3, 1, 11, 7, 57, 7, 125, 403, 947, 1261, 409,
    8083, 1, 1, 5, 13, 21, 63, 115, 233, 231, 921, 1747, 3635, 2519, 1, 1,
    5, 11, 3, 27, 15, 91, 505, 591, 1451, 3881, 2997, 1, 1, 3, 11, 21,
    9, 109, 153, 317, 533, 593, 3967, 2797, 1, 3, 3, 13, 9, 57, 121, 245,
    219, 867, 967, 791, 7095, 1, 1, 1, 9, 29, 21, 99, 35, 375, 959, 329,
    4087, 7171, 1, 1, 1, 9, 11, 17, 17, 97, 89, 135, 631, 3809, 3253, 1,
    1, 1, 15, 21, 51, 91, 249, 459, 801, 757, 2353, 2033, 1, 3, 5, 9,
    23, 29, 77, 53, 399, 767, 1817, 2171, 1629, 1, 1, 3, 5, 29, 5, 43,
    121, 17, 859, 1479, 3785, 6641, 1, 1, 3, 7, 7, 61, 45, 109, 371, 833,
    91, 153, 4553, 1, 1, 3, 11, 7, 55, 81, 123, 389, 139, 1933, 891, 1789,
    1, 3, 7, 15, 25, 17, 93, 165, 503, 717, 1553, 1475, 1627, 1, 1, 1,
    13, 13, 63, 13, 225, 357, 571, 33, 4073, 3795, 1, 1, 3, 11, 1, 31,
    107, 145, 407, 961, 501, 2987, 103, 1, 1, 7, 1, 23, 63, 49, 193, 173,
    281, 25, 2465, 5927, 1, 1, 7, 1, 1, 1, 85, 77, 273, 693, 349, 1239,
    4503, 1, 1, 5, 11, 7, 61, 9, 121, 25, 357, 1443, 405, 7827, 1, 1,
    7, 13, 11, 53, 11, 207, 145, 211, 1703, 1081, 2117, 1, 1, 3, 11, 27,
    23, 19, 9, 297, 279, 1481, 2273, 6387, 1, 3, 3, 5, 15, 45, 3, 41,
    305, 87, 1815, 3461, 5349, 1, 3, 3, 13, 9, 37, 79, 125, 259, 561, 1087,
    4091, 793, 1, 3, 5, 7, 31, 55, 7, 145, 347, 929, 589, 2783, 5905, 1,
    1, 7, 15, 3, 25, 1, 181, 13, 243, 653, 2235, 7445, 1, 3, 5, 5,
    17, 53, 65, 7, 33, 583, 1363, 1313, 2319, 1, 3, 3, 7, 27, 47, 97,
    201, 187, 321, 63, 1515, 7917, 1, 1, 3, 5, 23, 9, 3, 165, 61, 19,
    1789, 3783, 3037, 1, 3, 1, 13, 15, 43, 125, 191, 67, 273, 1551, 2227, 5253,
    1, 1, 1, 13, 25, 53, 107, 33, 299, 249, 1475, 2233, 907, 1, 3, 5,
    1, 23, 37, 85, 17, 207, 643, 665, 2933, 5199, 1, 1, 7, 7, 25, 57,
    59, 41, 15, 751, 751, 1749, 7053, 1, 3, 3, 1, 13, 25, 127, 93, 281,
    613, 875, 2223, 6345, 1, 1, 5, 3, 29, 55, 79, 249, 43, 317, 533, 995,
    1991, 1, 3, 3, 15, 17, 49, 79, 31, 193, 233, 1437, 2615, 819, 1, 1,
    5, 15, 25, 3, 123, 145, 377, 9, 455, 1191, 3953, 1, 3, 5, 3, 15,
    19, 41, 231, 81, 393, 3, 19, 2409, 1, 1, 3, 1, 27, 43, 113, 179,
    7, 853, 947, 2731, 297, 1, 1, 1, 11, 29, 39, 53, 191, 443, 689, 529,
    3329, 7431, 1, 3, 7, 5, 3, 29, 19, 67, 441, 113, 949, 2769, 4169, 1,
    3, 5, 11, 11, 55, 85, 169, 215, 815, 803, 2345, 3967, 1, 1, 7, 9,
    5, 45, 111, 5, 419, 375, 303, 1725, 4489, 1, 3, 5, 15, 29, 43, 79,
    19, 23, 417, 381, 541, 4923, 1, 1, 3, 15, 3, 31, 117, 39, 117, 305,
    1227, 1223, 143, 1, 1, 5, 9, 5, 47, 87, 239, 181, 353, 1561, 3313, 1921,
    1, 3, 3, 1, 3, 15, 53, 221, 441, 987, 1997, 2529, 8059, 1, 1, 7,
    11, 15, 57, 111, 139, 137, 883, 1881, 2823, 5661, 1, 3, 5, 5, 21, 11,
    5, 13, 27, 973, 587, 1331, 1373, 1, 1, 7, 11, 29, 51, 93, 29, 217,
    221, 55, 2477, 1979, 1, 3, 3, 13, 3, 11, 49, 75, 379, 371, 1441, 793,
    7633, 1, 1, 1, 13, 19, 45, 89, 249, 91, 649, 1695, 915, 5619, 1, 3,
    1, 7, 7, 29, 1, 77, 313, 895, 519, 771, 295, 1, 3, 1, 15, 5,
    3, 1, 57, 331, 109, 485, 2853, 6831, 1, 1, 1, 15, 17, 3, 35, 99,
    245, 971, 839, 2509, 2803, 1, 3, 3, 3, 9, 37, 57, 251, 325, 317, 529,
    1313, 6379, 1, 1, 1, 15, 25, 59, 1, 119, 95, 15, 795, 2375, 6463, 1,
    3, 1, 5, 1, 49, 117, 21, 47, 179, 863, 85, 1669, 1, 3, 7, 3,
    9, 37, 19, 221, 455, 973, 571, 1427, 817, 1, 1, 1, 15, 17, 9, 67,
    213, 127, 887, 1299, 2913, 7451, 1, 3, 1, 13, 27, 27, 41, 43, 171, 623,
    691, 391, 4885, 1, 3, 1, 13, 17, 17, 123, 239, 143, 227, 1151, 519, 6543,
    1, 3, 7, 5, 7, 63, 97, 39, 101, 555, 1057, 381, 7891, 1, 3, 5,
    1, 3, 27, 85, 129, 161, 875, 1945, 3541, 695, 1, 3, 3, 5, 21, 59,
    25, 183, 35, 25, 987, 1459, 181, 1, 3, 5, 13, 1, 15, 127, 237, 349,
    337, 1491, 2383, 7811, 1, 3, 5, 5, 31, 5, 109, 51, 409, 733, 1395, 3207,
    6049, 1, 1, 5, 7, 13, 35, 113, 25, 263, 389, 299, 2521, 1783, 1, 3,
    7, 11, 15, 47, 97, 73, 55, 75, 113, 2695, 1023, 1, 3, 1, 1, 3,
    13, 69, 211, 289, 483, 1335, 787, 677, 1, 1, 3, 3, 17, 7, 37, 77,
    505, 137, 1113, 345, 2975, 1, 1, 1, 13, 3, 11, 95, 199, 453, 109, 479,
    3725, 239, 1, 1, 7, 15, 19, 53, 3, 145, 359, 863, 347, 3833, 3043, 1,
    1, 7, 15, 25, 63, 127, 129, 125, 195, 155, 2211, 8153, 1, 1, 7, 13,
    9, 49, 121, 115, 73, 119, 1851, 727, 47, 1, 3, 3, 13, 13, 11, 71,
    7, 45, 591, 133, 2407, 5563, 1, 1, 1, 13, 23, 29, 87, 89, 501, 71,
    1759, 1119, 687, 1, 1, 7, 7, 13, 7, 13, 183, 53, 951, 1877, 3991, 6771,
    1, 3, 7, 11, 7, 1, 27, 47, 61, 21, 919, 961, 1091, 1, 3, 5,
    5, 1, 27, 1, 5, 63, 157, 1297, 1049, 5893, 1, 3, 7, 9, 19, 33,
    17, 133, 425, 797, 1721, 153, 119, 1, 3, 3, 7, 13, 37, 1, 215, 509,
    1003, 61, 2353, 7511, 1, 1, 7, 1, 29, 19, 31, 79, 199, 555, 1209, 1603,
    6089, 1, 3, 1, 1, 5, 31, 111, 127, 333, 429, 1863, 3925, 5411, 1, 1,
    7, 5, 5, 5, 123, 191, 47, 993, 269, 4051, 2111, 1, 1, 5, 15, 1,
    9, 87, 5, 47, 463, 865, 1813, 7357, 1, 3, 1, 3, 23, 63, 123, 83,
    511, 777, 63, 1285, 4537, 1, 3, 3, 7, 27, 25, 31, 65, 441, 529, 1815,
    1893, 323, 1, 3, 7, 5, 11, 19, 7, 5, 397, 811, 755, 2883, 4217, 1,
    3, 1, 13, 9, 21, 13, 7, 271, 539, 1769, 3243, 5325, 1, 1, 7, 1,
    31, 13, 47, 131, 181, 457, 1559, 2663, 6653, 1, 3, 3, 7, 29, 55, 25,
    203, 419, 91, 437, 1159, 5691, 1, 1, 3, 13, 29, 19, 71, 217, 337, 329,
    501, 939, 2205, 1, 1, 3, 1, 1, 27, 17, 201, 97, 285, 1269, 4043, 2207,
    1, 1, 1, 1, 3, 41, 13, 199, 141, 129, 1515, 3129, 5969, 1, 3, 3,
    9, 3, 17, 119, 41, 271, 933, 877, 701, 2197, 1, 1, 1, 7, 15, 47,
    3, 195, 115, 821, 725, 843, 6071, 1, 3, 5, 15, 17, 33, 85, 65, 297,
    571, 1123, 2743, 5727, 1, 1, 5, 11, 27, 15, 37, 235, 415, 293, 1439, 2739,
    4171, 1, 3, 7, 7, 1, 55, 71, 35, 307, 11, 401, 1881, 933, 1, 3,
    1, 11, 21, 37, 3, 177, 119, 339, 559, 3991, 3437, 1, 3, 3, 9, 17,
    17, 97, 119, 301, 169, 157, 3267, 2261, 1, 3, 3, 9, 29, 3, 111, 101,
    355, 869, 375, 2609, 7377, 1, 3, 5, 9, 7, 21, 123, 99, 343, 693, 1927,
    1605, 4923, 1, 1, 3, 5, 13, 31, 99, 17, 75, 385, 1539, 1553, 7077, 1,
    3, 3, 5, 31, 35, 107, 11, 407, 1019, 1317, 3593, 7203, 1, 3, 3, 13,
    17, 33, 99, 245, 401, 957, 157, 1949, 1571, 1, 3, 1, 11, 27, 15, 11,
    109, 429, 307, 1911, 2701, 861, 1, 1, 5, 13, 13, 35, 55, 255, 311, 957,
    1803, 2673, 5195, 1, 1, 1, 11, 19, 3, 89, 37, 211, 783, 1355, 3567, 7135,
    1, 1, 5, 5, 21, 49, 79, 17, 509, 331, 183, 3831, 855, 1, 3, 7,
    5, 29, 19, 85, 109, 105, 523, 845, 3385, 7477, 1, 1, 1, 7, 25, 17,
    125, 131, 53, 757, 253, 2989, 2939, 1, 3, 3, 9, 19, 23, 105, 39, 351,
    677, 211, 401, 8103, 1, 3, 5, 1, 5, 11, 17, 3, 405, 469, 1569, 2865,
    3133, 1, 1, 3, 13, 15, 5, 117, 179, 139, 145, 477, 1137, 2537, 1, 1,
    7, 9, 5, 21, 9, 93, 211, 963, 1207, 3343, 4911, 1, 1, 1, 9, 13,
    43, 17, 53, 81, 793, 1571, 2523, 3683, 1, 3, 3, 13, 25, 21, 5, 59,
    489, 987, 1941, 171, 6009, 1, 3, 3, 7, 1, 39, 89, 171, 403, 467, 1767,
    3423, 2791, 1, 1, 3, 9, 19, 49, 91, 125, 163, 1013, 89, 2849, 6785, 1,
    1, 5, 9, 9, 11, 15, 241, 43, 297, 1719, 1541, 1821, 1, 3, 7, 15,
    29, 23, 103, 239, 191, 33, 1043, 3649, 6579, 1, 3, 3, 9, 21, 51, 123,
    55, 223, 645, 1463, 4021, 5891, 1, 1, 5, 7, 3, 41, 27, 235, 391, 303,
    2021, 3187, 7607, 1, 1, 1, 9, 5, 49, 49, 29, 377, 251, 1887, 1017, 1301,
    1, 1, 3, 3, 13, 41, 27, 47, 223, 23, 517, 3227, 6731, 1, 1, 7,
    1, 31, 25, 47, 9, 511, 623, 2047, 1263, 1511, 1, 1, 3, 15, 15, 23,
    53, 1, 261, 595, 85, 241, 7047, 1, 3, 3, 11, 17, 5, 81, 73, 149,
    781, 2035, 3163, 4247, 1, 3, 7, 7, 29, 59, 49, 79, 397, 901, 1105, 2191,
    6277, 1, 3, 3, 11, 13, 27, 25, 173, 107, 73, 1265, 585, 5251, 1, 1,
    7, 15, 29, 23, 73, 229, 235, 887, 1469, 4073, 2591, 1, 1, 3, 9, 17,
    15, 83, 173, 207, 879, 1701, 1509, 11, 1, 1, 3, 5, 5, 37, 65, 161,
    39, 421, 1153, 2007, 5355, 1, 1, 7, 11, 23, 37, 5, 11, 9, 499, 17,
    157, 5747, 1, 3, 7, 13, 25, 9, 49, 7, 39, 945, 1349, 1759, 1441, 1,
    1, 5, 3, 21, 15, 113, 81, 265, 837, 333, 3625, 6133, 1, 3, 1, 11,
    13, 27, 73, 109, 297, 327, 299, 3253, 6957, 1, 1, 3, 13, 19, 39, 123,
    73, 65, 5, 1061, 2187, 5055, 1, 1, 3, 1, 11, 31, 21, 115, 453, 857,
    711, 495, 549, 1, 3, 7, 7, 15, 29, 79, 103, 47, 713, 1735, 3121, 6321,
    1, 1, 5, 5, 29, 9, 97, 33, 471, 705, 329, 1501, 1349, 1, 3, 3,
    1, 21, 9, 111, 209, 71, 47, 491, 2143, 1797, 1, 3, 3, 3, 11, 39,
    21, 135, 445, 259, 607, 3811, 5449, 1, 1, 7, 9, 11, 25, 113, 251, 395,
    317, 317, 91, 1979, 1, 3, 1, 9, 3, 21, 103, 133, 389, 943, 1235, 1749,
    7063, 1, 1, 3, 7, 1, 11, 5, 15, 497, 477, 479, 3079, 6969, 1, 1,
    3, 3, 15, 39, 105, 131, 475, 465, 181, 865, 3813, 1, 1, 7, 9, 19,
    63, 123, 131, 415, 525, 457, 2471, 3135, 1, 3, 7, 15, 25, 35, 123, 45,
    341, 805, 485, 4049, 7065, 1, 1, 1, 5, 29, 9, 47, 227, 51, 867, 1873,
    1593, 2271, 1, 1, 7, 15, 31, 9, 71, 117, 285, 711, 837, 1435, 6275, 1,
    3, 1, 1, 5, 19, 79, 25, 301, 415, 1871, 645, 3251, 1, 3, 1, 3,
    17, 51, 99, 185, 447, 43, 523, 219, 429, 1, 3, 1, 13, 29, 13, 51,
    93, 7, 995, 757, 3017, 6865, 1, 1, 3, 15, 7, 25, 75, 17, 155, 981,
    1231, 1229, 1995, 1, 3, 5, 3, 27, 45, 71, 73, 225, 763, 377, 1139, 2863,
    1, 1, 3, 1, 1, 39, 69, 113, 29, 371, 1051, 793, 3749, 1, 1, 3,
    13, 23, 61, 27, 183, 307, 431, 1345, 2757, 4031, 1, 3, 7, 5, 5, 59,
    117, 197, 303, 721, 877, 723, 1601, 1, 3, 5, 1, 27, 33, 99, 237, 485,
    711, 665, 3077, 5105, 1, 1, 3, 1, 13, 9, 103, 201, 23, 951, 2029, 165,
    2093, 1, 3, 5, 13, 5, 29, 55, 85, 221, 677, 611, 3613, 4567, 1, 1,
    1, 1, 7, 61, 9, 233, 261, 561, 953, 4023, 2443, 1, 3, 3, 13, 1,
    17, 103, 71, 223, 213, 833, 1747, 6999, 1, 3, 5, 15, 25, 53, 57, 187,
    25, 695, 1207, 4089, 2877, 1, 1, 7, 1, 7, 31, 87, 129, 493, 519, 1555,
    1155, 4637, 1, 1, 1, 15, 21, 17, 23, 29, 19, 255, 927, 1791, 3093, 1,
    1, 3, 9, 17, 33, 95, 129, 175, 461, 287, 2633, 2325, 1, 3, 5, 7,
    23, 19, 63, 209, 249, 583, 1373, 2039, 2225, 1, 3, 3, 5, 5, 19, 79,
    241, 459, 355, 1455, 3313, 3639, 1, 1, 7, 9, 21, 41, 97, 119, 129, 769,
    1541, 3495, 7741, 1, 1, 7, 11, 9, 29, 35, 255, 141, 937, 1763, 41, 1393,
    1, 3, 7, 1, 13, 51, 61, 157, 177, 847, 1829, 3539, 285, 1, 1, 1,
    15, 21, 13, 9, 55, 397, 19, 1495, 1255, 7235, 1, 1, 7, 7, 25, 37,
    53, 237, 319, 197, 269, 1205, 1485, 1, 1, 5, 15, 23, 17, 35, 247, 323,
    807, 233, 3681, 4407, 1, 1, 3, 7, 9, 59, 85, 105, 493, 763, 1639, 391,
    1451, 1, 3, 3, 9, 15, 33, 5, 253, 129, 625, 1527, 2793, 6057, 1, 3,
    1, 1, 7, 47, 21, 161, 235, 83, 397, 3563, 5953, 1, 3, 7, 11, 3,
    41, 25, 117, 375, 779, 1297, 3715, 8117, 1, 1, 3, 7, 31, 19, 103, 173,
    475, 189, 2035, 2921, 1107, 1, 1, 7, 3, 25, 7, 93, 255, 307, 113, 1893,
    2233, 6919, 1, 3, 5, 15, 9, 57, 79, 143, 165, 5, 1389, 193, 693, 1,
    3, 5, 1, 29, 45, 91, 49, 189, 461, 439, 1283, 7835, 1, 1, 3, 13,
    11, 61, 41, 231, 373, 695, 395, 915, 5393, 1, 3, 7, 11, 5, 51, 67,
    53, 483, 95, 1943, 247, 5653, 1, 3, 7, 5, 5, 57, 45, 235, 137, 793,
    1069, 1661, 1557, 1, 3, 5, 3, 25, 55, 103, 177, 81, 861, 1151, 143, 7655,
    1, 1, 3, 1, 21, 41, 67, 131, 253, 431, 1269, 3181, 3429, 1, 3, 1,
    1, 21, 7, 77, 221, 257, 663, 71, 2949, 2481, 1, 3, 5, 3, 3, 23,
    45, 107, 299, 739, 1013, 3, 3165, 1, 1, 5, 1, 3, 37, 109, 37, 243,
    983, 1221, 1691, 3869, 1, 1, 5, 5, 31, 7, 5, 193, 397, 867, 1495, 3435,
    7441, 1, 1, 1, 1, 17, 59, 97, 233, 389, 597, 1013, 1631, 483, 1, 1,
    1, 11, 7, 41, 107, 53, 111, 125, 1513, 1921, 7647, 1, 3, 3, 3, 31,
    29, 117, 3, 365, 971, 1139, 2123, 5913, 1, 1, 1, 13, 23, 3, 1, 167,
    475, 639, 1811, 3841, 3081, 1, 1, 5, 3, 5, 47, 65, 123, 275, 783, 95,
    119, 7591, 1, 3, 1, 15, 13, 33, 93, 237, 467, 431, 705, 4013, 4035, 1,
    3, 5, 1, 19, 7, 101, 231, 155, 737, 1381, 3343, 2051, 1, 1, 5, 9,
    15, 49, 45, 163, 433, 765, 2031, 201, 2589, 1, 3, 7, 9, 19, 41, 31,
    89, 93, 623, 105, 745, 4409, 1, 1, 5, 1, 11, 45, 127, 85, 389, 439,
    829, 477, 7965, 1, 3, 3, 15, 13, 41, 1, 207, 435, 585, 311, 1725, 2737,
    1, 3, 3, 3, 13, 49, 21, 31, 197, 799, 1411, 2959, 7133, 1, 3, 1,
    3, 7, 43, 9, 141, 133, 579, 1059, 93, 957, 1, 3, 7, 1, 15, 51,
    23, 213, 381, 851, 699, 2261, 3419, 1, 3, 5, 9, 25, 35, 67, 141, 35,
    409, 1423, 365, 1645, 1, 3, 3, 11, 15, 33, 27, 181, 93, 87, 1761, 3511,
    1353, 1, 3, 5, 3, 25, 63, 111, 137, 321, 819, 705, 1547, 7271, 1, 3,
    1, 1, 5, 57, 99, 59, 411, 757, 1371, 3953, 3695, 1, 3, 5, 11, 11,
    21, 25, 147, 239, 455, 709, 953, 7175, 1, 3, 3, 15, 5, 53, 91, 205,
    341, 63, 723, 1565, 7135, 1, 1, 7, 15, 11, 21, 99, 79, 63, 593, 2007,
    3629, 5271, 1, 3, 3, 1, 9, 21, 45, 175, 453, 435, 1855, 2649, 6959, 1,
    1, 3, 15, 15, 33, 121, 121, 251, 431, 1127, 3305, 4199, 1, 1, 1, 9,
    31, 15, 71, 29, 345, 391, 1159, 2809, 345, 1, 3, 7, 1, 23, 29, 95,
    151, 327, 727, 647, 1623, 2971, 1, 1, 7, 7, 9, 29, 79, 91, 127, 909,
    1293, 1315, 5315, 1, 1, 5, 11, 13, 37, 89, 73, 149, 477, 1909, 3343, 525,
    1, 3, 5, 7, 5, 59, 55, 255, 223, 459, 2027, 237, 4205, 1, 1, 1,
    7, 27, 11, 95, 65, 325, 835, 907, 3801, 3787, 1, 1, 1, 11, 27, 33,
    99, 175, 51, 913, 331, 1851, 4133, 1, 3, 5, 5, 13, 37, 31, 99, 273,
    409, 1827, 3845, 5491, 1, 1, 3, 7, 23, 19, 107, 85, 283, 523, 509, 451,
    421, 1, 3, 5, 7, 13, 9, 51, 81, 87, 619, 61, 2803, 5271, 1, 1,
    1, 15, 9, 45, 35, 219, 401, 271, 953, 649, 6847, 1, 1, 7, 11, 9,
    45, 17, 219, 169, 837, 1483, 1605, 2901, 1, 1, 7, 7, 21, 43, 37, 33,
    291, 359, 71, 2899, 7037, 1, 3, 3, 13, 31, 53, 37, 15, 149, 949, 551,
    3445, 5455, 1, 3, 1, 5, 19, 45, 81, 223, 193, 439, 2047, 3879, 789, 1,
    1, 7, 3, 11, 63, 35, 61, 255, 563, 459, 2991, 3359, 1, 1, 5, 9,
    13, 49, 47, 185, 239, 221, 1533, 3635, 2045, 1, 3, 7, 3, 25, 37, 127,
    223, 51, 357, 483, 3837, 6873, 1, 1, 7, 9, 31, 37, 113, 31, 387, 833,
    1243, 1543, 5535, 1, 3, 1, 9, 23, 59, 119, 221, 73, 185, 2007, 2885, 2563,
    1, 1, 1, 13, 7, 33, 53, 179, 67, 185, 1541, 1807, 4659, 1, 3, 1,
    11, 31, 37, 23, 215, 269, 357, 207, 645, 4219, 1, 3, 3, 13, 19, 27,
    107, 55, 91, 71, 1695, 1815, 89, 1, 1, 3, 15, 3, 19, 35, 247, 49,
    529, 1523, 3317, 6151, 1, 1, 7, 7, 23, 25, 107, 139, 483, 503, 1277, 243,
    7879, 1, 3, 3, 13, 3, 15, 11, 197, 135, 839, 985, 275, 5527, 1, 3,
    5, 3, 25, 47, 95, 21, 113, 307, 1001, 3065, 295, 1, 1, 3, 9, 19,
    19, 99, 213, 363, 449, 735, 2851, 2521, 1, 1, 3, 9, 5, 49, 63, 61,
    157, 857, 497, 2801, 6987, 1, 1, 1, 9, 1, 41, 109, 119, 499, 939, 867,
    3675, 8023, 1, 3, 1, 1, 13, 33, 109, 123, 289, 3, 1271, 2773, 4265, 1,
    3, 1, 11, 9, 57, 83, 221, 95, 43, 1189, 457, 7133, 1, 1, 7, 3,
    11, 49, 33, 219, 229, 289, 685, 3359, 4495, 1, 3, 1, 3, 19, 43, 67,
    193, 41, 771, 407, 81, 3891, 1, 1, 7, 11, 5, 29, 51, 175, 297, 539,
    1, 2245, 6439, 1, 3, 7, 15, 21, 33, 117, 183, 511, 489, 1283, 3281, 5979,
    1, 3, 7, 5, 9, 3, 125, 147, 359, 549, 369, 3049, 2405, 1, 3, 5,
    7, 19, 5, 65, 97, 483, 377, 1523, 1457, 2995, 1, 1, 5, 1, 11, 21,
    41, 113, 277, 131, 1475, 1043, 2367, 1, 3, 3, 1, 15, 17, 101, 69, 443,
    865, 817, 1421, 5231, 1, 1, 3, 3, 3, 55, 95, 99, 75, 195, 1929, 3931,
    5855, 1, 3, 1, 3, 19, 23, 93, 213, 241, 551, 1307, 585, 7729, 1, 3,
    1, 11, 23, 15, 53, 249, 467, 519, 95, 741, 409, 1, 1, 1, 15, 29,
    37, 43, 203, 233, 877, 77, 1933, 2729, 1, 3, 7, 11, 27, 39, 43, 161,
    255, 15, 1463, 833, 495, 1, 1, 7, 11, 3, 53, 81, 67, 375, 823, 1903,
    3061, 395, 1, 1, 1, 1, 15, 37, 93, 233, 247, 501, 1321, 3275, 5409, 1,
    3, 3, 7, 7, 11, 5, 105, 139, 983, 1239, 531, 3881, 1, 1, 5, 3,
    19, 49, 107, 227, 361, 101, 355, 2649, 7383, 1, 1, 7, 5, 25, 41, 101,
    121, 209, 293, 1937, 2259, 5557, 1, 1, 3, 7, 7, 1, 9, 13, 463, 1019,
    995, 3159, 107, 1, 3, 5, 11, 5, 35, 127, 97, 261, 789, 807, 807, 6257,
    1, 1, 7, 5, 11, 13, 45, 91, 417, 101, 1973, 3645, 2107, 1, 1, 3,
    7, 5, 63, 57, 49, 203, 157, 115, 1393, 8117, 1, 3, 5, 5, 3, 43,
    15, 155, 127, 489, 1165, 3701, 4867, 1, 1, 7, 7, 29, 29, 69, 215, 415,
    367, 371, 1901, 6075, 1, 1, 1, 3, 11, 33, 89, 149, 433, 705, 1437, 1597,
    505, 1, 3, 5, 1, 13, 37, 19, 119, 5, 581, 2037, 1633, 2099, 1, 3,
    7, 13, 5, 49, 103, 245, 215, 515, 133, 2007, 1933, 1, 3, 1, 9, 1,
    3, 25, 197, 253, 387, 1683, 2267, 221, 1, 3, 5, 15, 21, 9, 73, 201,
    405, 999, 437, 3877, 6045, 1, 1, 3, 1, 31, 55, 25, 83, 421, 395, 1807,
    2129, 7797, 1, 1, 3, 1, 23, 21, 121, 183, 125, 347, 143, 3685, 4317, 1,
    3, 3, 3, 17, 45, 17, 223, 267, 795, 1815, 1309, 155, 1, 1, 1, 15,
    17, 59, 5, 133, 15, 715, 1503, 153, 2887, 1, 1, 1, 1, 27, 13, 119,
    77, 243, 995, 1851, 3719, 4695, 1, 3, 1, 5, 31, 49, 43, 165, 49, 609,
    1265, 1141, 505, 1, 1, 7, 13, 11, 63, 21, 253, 229, 585, 1543, 3719, 4141,
    1, 3, 7, 11, 23, 27, 17, 131, 295, 895, 1493, 1411, 3247, 1, 1, 5,
    9, 29, 7, 97, 15, 113, 445, 859, 1483, 1121, 1, 3, 1, 9, 13, 49,
    99, 107, 323, 201, 681, 3071, 5281, 1, 1, 1, 15, 9, 19, 61, 161, 7,
    87, 587, 2199, 2811, 1, 3, 3, 15, 15, 19, 95, 45, 299, 829, 981, 3479,
    487, 1, 1, 1, 9, 3, 37, 7, 19, 227, 13, 397, 513, 1257, 1, 1,
    5, 15, 15, 13, 17, 111, 135, 929, 1145, 811, 1801, 1, 3, 1, 3, 27,
    57, 31, 19, 279, 103, 693, 631, 3409, 1, 1, 1, 1, 15, 13, 67, 83,
    23, 799, 1735, 2063, 3363, 1, 3, 3, 7, 3, 1, 61, 31, 41, 533, 2025,
    4067, 6963, 1, 1, 5, 7, 17, 27, 81, 79, 107, 205, 29, 97, 4883, 1,
    1, 1, 5, 19, 49, 91, 201, 283, 949, 651, 3819, 5073, 1, 1, 7, 9,
    11, 13, 73, 197, 37, 219, 1931, 3369, 6017, 1, 1, 7, 15, 11, 7, 75,
    205, 7, 819, 399, 661, 6487, 1, 3, 3, 3, 27, 37, 95, 41, 307, 165,
    1077, 3485, 563, 1, 3, 5, 3, 21, 49, 57, 179, 109, 627, 1789, 431, 2941,
    1, 1, 7, 5, 11, 19, 43, 137, 149, 679, 1543, 245, 1381, 1, 3, 5,
    5, 15, 3, 69, 81, 135, 159, 1363, 3401, 6355, 1, 3, 5, 1, 9, 61,
    49, 53, 319, 25, 1647, 1297, 615, 1, 3, 5, 11, 31, 43, 9, 101, 71,
    919, 335, 3147, 5823, 1, 3, 1, 1, 15, 5, 29, 109, 511, 945, 867, 3677,
    6915, 1, 3, 3, 15, 17, 49, 91, 111, 215, 29, 1879, 97, 2505, 1, 3,
    1, 13, 19, 61, 11, 111, 163, 777, 533, 1113, 5339, 1, 1, 7, 9, 17,
    55, 117, 91, 455, 289, 557, 913, 4455, 1, 3, 1, 7, 25, 19, 123, 37,
    1, 277, 717, 2965, 4469, 1, 3, 7, 3, 19, 23, 87, 235, 209, 457, 2041,
    2893, 1805, 1, 3, 3, 5, 5, 43, 23, 61, 351, 791, 59, 2009, 2909, 1,
    1, 3, 7, 5, 1, 27, 231, 385, 257, 1261, 2701, 1807, 1, 3, 1, 1,
    27, 19, 87, 253, 131, 685, 1743, 3983, 2651, 1, 3, 7, 11, 21, 17, 11,
    81, 191, 641, 1821, 3005, 7251, 1, 3, 3, 5, 15, 31, 41, 213, 55, 931,
    1953, 49, 6037, 1, 1, 7, 15, 7, 27, 65, 223, 113, 79, 1875, 911, 5445,
    1, 3, 7, 7, 23, 55, 51, 167, 495, 25, 1585, 3447, 799, 1, 1, 3,
    7, 27, 15, 95, 193, 337, 415, 975, 3085, 967, 1, 1, 7, 15, 19, 7,
    93, 41, 433, 551, 401, 3169, 3971, 1, 1, 7, 11, 13, 15, 53, 69, 433,
    59, 1117, 3359, 6231, 1, 1, 7, 3, 23, 5, 115, 201, 225, 109, 1903, 3897,
    6265, 1, 1, 1, 11, 17, 1, 39, 143, 361, 659, 1105, 23, 4923, 1, 1,
    1, 9, 27, 57, 85, 227, 261, 119, 1881, 3965, 6999, 1, 3, 7, 7, 15,
    7, 107, 17, 315, 49, 1591, 905, 7789, 1, 3, 1, 7, 29, 3, 47, 237,
    157, 769, 839, 3199, 3195, 1, 1, 3, 15, 25, 39, 63, 15, 111, 857, 881,
    1505, 7671, 1, 1, 7, 1, 3, 35, 41, 215, 99, 895, 1025, 1483, 4707, 1,
    3, 5, 1, 1, 31, 25, 247, 113, 841, 397, 1825, 6969, 1, 1, 3, 5,
    19, 41, 49, 243, 225, 973, 241, 175, 1041, 1, 1, 1, 7, 15, 15, 105,
    141, 83, 75, 1675, 3523, 5219, 1, 1, 7, 5, 13, 27, 47, 199, 445, 841,
    959, 1157, 2209, 1, 3, 5, 15, 23, 31, 31, 81, 85, 33, 785, 2639, 7799,
    1, 1, 5, 13, 21, 3, 47, 99, 235, 943, 1731, 2467, 7891, 1, 1, 1,
    3, 17, 53, 85, 219, 73, 131, 1339, 875, 1191, 1, 1, 5, 7, 17, 63,
    113, 7, 185, 557, 749, 3563, 4973, 1, 3, 3, 15, 15, 21, 43, 111, 155,
    689, 345, 423, 3597, 1, 1, 5, 1, 15, 29, 93, 5, 361, 713, 695, 3937,
    425, 1, 3, 7, 7, 13, 41, 115, 175, 315, 937, 123, 2841, 4457, 1, 1,
    3, 11, 25, 5, 103, 53, 423, 811, 657, 399, 7257, 1, 1, 1, 1, 1,
    13, 101, 211, 383, 325, 97, 1703, 4429, 1, 3, 7, 9, 31, 45, 83, 157,
    509, 701, 841, 1105, 3643, 1, 1, 1, 7, 1, 9, 69, 17, 129, 281, 1161,
    2945, 7693, 1, 3, 7, 1, 11, 29, 51, 143, 77, 433, 1723, 2317, 5641, 1,
    1, 1, 1, 21, 43, 13, 67, 177, 505, 1629, 1267, 4885, 1, 1, 3, 11,
    27, 63, 111, 47, 233, 781, 453, 1679, 3209, 1, 1, 3, 13, 29, 27, 119,
    141, 493, 971, 461, 1159, 633, 1, 1, 3, 15, 23, 5, 79, 215, 163, 149,
    1805, 2399, 61, 1, 3, 5, 13, 19, 5, 1, 39, 409, 561, 709, 829, 1357,
    1, 3, 3, 13, 19, 43, 9, 177, 449, 447, 73, 2107, 5669, 1, 3, 5,
    1, 23, 13, 63, 109, 203, 593, 829, 4017, 6881, 1, 1, 5, 7, 3, 9,
    53, 175, 391, 169, 1283, 3793, 4451, 1, 1, 5, 7, 29, 43, 9, 5, 209,
    77, 927, 2941, 8145, 1, 3, 5, 15, 17, 49, 5, 143, 131, 771, 1685, 925,
    2175, 1, 1, 3, 11, 27, 27, 27, 159, 161, 1015, 1587, 4049, 1983, 1, 3,
    1, 3, 23, 57, 119, 67, 481, 577, 389, 3319, 5325, 1, 3, 5, 1, 19,
    39, 87, 61, 329, 657, 1773, 31, 1707, 1, 1, 3, 1, 5, 25, 15, 241,
    131, 815, 1751, 3029, 8039, 1, 3, 3, 13, 27, 13, 77, 87, 437, 57, 621,
    1031, 7891, 1, 3, 1, 13, 23, 51, 117, 37, 331, 745, 605, 3179, 4713, 1,
    1, 5, 5, 19, 17, 99, 167, 87, 721, 737, 789, 2165, 1, 3, 5, 13,
    1, 51, 119, 211, 165, 299, 1327, 3053, 3343, 1, 1, 5, 15, 29, 45, 17,
    129, 67, 345, 1553, 2705, 7369, 1, 1, 1, 9, 23, 7, 13, 209, 7, 407,
    317, 3077, 7287, 1, 1, 1, 5, 9, 59, 89, 3, 487, 451, 505, 2499, 7563,
    1, 3, 1, 7, 21, 1, 21, 203, 101, 417, 1389, 2751, 1397, 1, 3, 7,
    13, 7, 31, 3, 247, 349, 485, 1259, 549, 6321, 1, 1, 7, 7, 27, 33,
    107, 197, 293, 729, 1753, 2571, 103, 1, 3, 5, 9, 25, 35, 5, 253, 137,
    213, 2041, 3387, 1809, 1, 1, 7, 13, 15, 35, 67, 83, 295, 175, 839, 2831,
    839, 1, 3, 3, 11, 3, 17, 55, 141, 247, 991, 117, 3799, 1221, 1, 1,
    5, 1, 11, 37, 87, 233, 457, 653, 899, 2933, 3105, 1, 1, 3, 15, 3,
    31, 67, 167, 437, 9, 651, 1109, 1139, 1, 1, 3, 1, 7, 63, 67, 17,
    11, 883, 1855, 1941, 4751, 1, 3, 7, 9, 19, 33, 113, 117, 495, 39, 1795,
    2561, 5519, 1, 1, 7, 5, 1, 3, 103, 37, 201, 223, 1101, 877, 6483, 1,
    1, 5, 9, 29, 49, 51, 33, 439, 917, 861, 1321, 2135, 1, 1, 3, 3,
    1, 5, 17, 93, 217, 619, 613, 1357, 6095, 1, 3, 1, 11, 3, 21, 5,
    41, 15, 175, 843, 2937, 6849, 1, 3, 3, 7, 9, 57, 55, 127, 79, 287,
    445, 2205, 7989, 1, 1, 7, 13, 23, 17, 93, 129, 157, 135, 1747, 1813, 4183,
    1, 1, 1, 5, 31, 59, 99, 33, 425, 329, 887, 367, 1761, 1, 1, 7,
    9, 17, 53, 77, 139, 435, 387, 49, 3649, 1773, 1, 3, 3, 15, 21, 57,
    45, 161, 331, 719, 273, 3479, 4173, 1, 1, 3, 9, 3, 3, 105, 201, 373,
    877, 919, 1263, 6649, 1, 3, 1, 15, 13, 43, 13, 99, 73, 163, 353, 3569,
    5601, 1, 3, 7, 3, 5, 9, 69, 177, 449, 47, 781, 1125, 4245, 1, 1,
    1, 5, 3, 45, 1, 123, 409, 903, 205, 2057, 7637, 1, 3, 5, 9, 19,
    47, 87, 135, 481, 799, 101, 3409, 2241, 1, 3, 1, 13, 3, 25, 15, 27,
    181, 967, 669, 2577, 7249, 1, 1, 7, 3, 31, 5, 103, 53, 1, 911, 1209,
    3697, 6685, 1, 1, 3, 1, 5, 5, 49, 135, 281, 747, 761, 2973, 7963, 1,
    3, 3, 5, 19, 61, 125, 199, 299, 515, 1365, 369, 7027, 1, 3, 1, 7,
    5, 41, 63, 229, 283, 571, 147, 447, 657, 1, 3, 1, 11, 5, 15, 55,
    7, 259, 61, 27, 1429, 5631, 1, 1, 5, 1, 3, 53, 51, 253, 155, 553,
    1293, 3735, 6567, 1, 3, 5, 9, 5, 41, 21, 159, 101, 785, 1981, 3799, 7693,
    1, 3, 7, 7, 9, 3, 95, 105, 129, 213, 1215, 1027, 5699, 1, 1, 3,
    3, 29, 13, 9, 253, 449, 321, 341, 2879, 171, 1, 3, 7, 11, 21, 11,
    75, 35, 43, 965, 675, 2217, 7175, 1, 1, 5, 15, 31, 5, 29, 137, 311,
    751, 47, 1367, 5921, 1, 1, 3, 15, 17, 1, 45, 69, 55, 649, 835, 569,
    7615, 1, 3, 1, 13, 31, 7, 23, 15, 391, 145, 1845, 1825, 1403, 1, 1,
    3, 15, 5, 9, 79, 77, 105, 399, 1933, 2503, 4781, 1, 3, 1, 3, 17,
    47, 19, 13, 107, 475, 759, 2933, 3761, 1, 1, 7, 11, 3, 7, 121, 209,
    397, 877, 293, 847, 7039, 1, 1, 1, 15, 29, 45, 5, 109, 335, 461, 143,
    931, 4045, 1, 3, 1, 7, 11, 57, 73, 89, 201, 173, 803, 3953, 5205, 1,
    1, 5, 11, 11, 33, 37, 29, 263, 1019, 657, 1453, 7807, 1, 3, 3, 13,
    31, 25, 37, 47, 261, 607, 1703, 2603, 417, 1, 1, 1, 1, 31, 61, 45,
    115, 275, 239, 1989, 1897, 4329, 1, 3, 5, 3, 31, 3, 11, 173, 335, 579,
    1193, 2219, 7875, 1, 1, 7, 9, 29, 45, 13, 67, 399, 177, 1293, 3865, 2225,
    1, 1, 7, 11, 11, 51, 121, 227, 469, 905, 929, 2635, 4165, 1, 3, 7,
    9, 13, 39, 55, 167, 23, 147, 1603, 2083, 4645, 1, 1, 3, 15, 27, 53,
    11, 155, 157, 629, 259, 3009, 4605, 1, 3, 1, 7, 15, 47, 51, 1, 259,
    603, 887, 2833, 6581, 1, 3, 5, 3, 1, 47, 91, 43, 361, 571, 29, 1453,
    4269, 1, 1, 3, 9, 11, 51, 55, 23, 415, 277, 1423, 3475, 1527, 1, 1,
    3, 11, 29, 49, 101, 75, 299, 709, 805, 4037, 4389, 1, 1, 7, 3, 23,
    1, 37, 51, 379, 771, 1301, 3717, 6673, 1, 1, 5, 3, 23, 11, 125, 177,
    375, 665, 951, 1577, 2603, 1, 1, 1, 1, 1, 5, 71, 255, 21, 459, 467,
    2083, 5415, 1, 1, 5, 13, 23, 29, 109, 157, 363, 971, 549, 647, 1177, 1,
    1, 3, 9, 7, 15, 101, 3, 365, 213, 745, 1155, 6099, 1, 3, 5, 15,
    15, 19, 47, 179, 303, 521, 1279, 219, 2415, 1, 3, 3, 13, 27, 11, 83,
    165, 369, 989, 261, 3933, 4809, 1, 1, 3, 11, 31, 59, 1, 185, 53, 703,
    1471, 2935, 1107, 1, 3, 3, 7, 25, 3, 81, 27, 93, 521, 433, 2859, 5861,
    1, 3, 3, 11, 29, 15, 49, 167, 315, 927, 543, 3473, 4307, 1, 3, 1,
    3, 29, 33, 53, 15, 183, 691, 703, 1311, 3393, 1, 3, 5, 13, 23, 49,
    3, 11, 1, 357, 1407, 415, 7211, 1, 3, 7, 15, 1, 25, 91, 113, 323,
    371, 189, 925, 1181, 1, 3, 3, 3, 17, 59, 119, 199, 115, 223, 877, 2193,
    193, 1, 1, 1, 5, 5, 35, 31, 59, 437, 411, 37, 2405, 3797, 1, 3,
    1, 13, 9, 37, 1, 241, 59, 157, 1785, 1223, 563, 1, 3, 5, 13, 3,
    21, 25, 95, 15, 745, 85, 701, 5361, 1, 3, 7, 1, 31, 33, 111, 195,
    35, 913, 2013, 2951, 6611, 1, 3, 5, 1, 19, 3, 75, 119, 111, 409, 951,
    1457, 4957, 1, 3, 1, 15, 19, 59, 3, 155, 237, 657, 1967, 3323, 6235, 1,
    1, 5, 1, 3, 19, 45, 105, 377, 881, 167, 2255, 4483, 1, 1, 7, 7,
    13, 13, 99, 89, 201, 279, 161, 2483, 6001, 1, 1, 7, 3, 13, 17, 97,
    129, 137, 377, 1519, 183, 3725, 1, 1, 7, 9, 9, 5, 45, 135, 115, 181,
    1685, 3505, 4387, 1, 1, 1, 1, 19, 35, 69, 113, 305, 419, 949, 2969, 247,
    1, 1, 5, 13, 23, 61, 13, 139, 501, 811, 67, 1501, 6493, 1, 1, 3,
    13, 15, 41, 27, 217, 293, 13, 145, 2631, 6991, 1, 3, 3, 13, 15, 37,
    71, 123, 285, 49, 627, 1283, 5993, 1, 3, 3, 11, 9, 25, 11, 1, 203,
    353, 1347, 1999, 2799, 1, 3, 5, 1, 7, 49, 101, 231, 499, 63, 1977, 2207,
    7829, 1, 1, 7, 1, 17, 15, 115, 139, 381, 943, 623, 4037, 2971, 1, 1,
    3, 5, 13, 55, 23, 87, 139, 795, 1669, 1375, 1185, 1, 3, 3, 5, 5,
    45, 97, 253, 241, 333, 645, 555, 7867, 1, 3, 5, 1, 1, 1, 89, 27,
    407, 509, 1433, 609, 2355, 1, 3, 7, 1, 27, 29, 5, 157, 495, 811, 1293,
    1143, 827, 1, 1, 3, 3, 25, 49, 127, 111, 191, 3, 845, 1383, 2521, 1,
    1, 5, 7, 5, 51, 101, 155, 237, 461, 831, 3091, 3851, 1, 3, 7, 1,
    29, 35, 105, 91, 285, 705, 131, 395, 6011, 1, 3, 5, 3, 13, 21, 83,
    173, 221, 827, 1775, 1931, 6727, 1, 1, 3, 5, 3, 25, 95, 115, 205, 569,
    1447, 933, 6425, 1, 1, 7, 9, 31, 3, 17, 175, 145, 447, 1321, 1069, 6527,
    1, 1, 3, 3, 23, 1, 79, 51, 421, 419, 873, 3939, 1801, 1, 1, 5,
    1, 3, 39, 15, 85, 169, 669, 919, 397, 5579, 1, 3, 5, 1, 21, 61,
    87, 217, 251, 619, 1091, 4009, 229, 1, 1, 1, 11, 23, 55, 85, 121, 363,
    867, 315, 447, 3373, 1, 3, 3, 13, 29, 19, 89, 85, 137, 469, 1873, 2765,
    3975, 1, 3, 7, 13, 19, 63, 61, 77, 67, 361, 11, 1787, 4703, 1, 1,
    3, 11, 7, 15, 127, 105, 179, 857, 1671, 3647, 3389, 1, 1, 1, 7, 19,
    21, 99, 161, 499, 519, 1287, 2973, 479, 1, 1, 3, 13, 29, 51, 95, 251,
    55, 519, 1955, 2881, 5951, 1, 1, 3, 11, 23, 63, 121, 237, 175, 311, 701,
    1539, 2383, 1, 1, 7, 5, 5, 45, 73, 97, 5, 153, 715, 2037, 3353, 1,
    1, 1, 3, 13, 7, 67, 173, 425, 843, 1497, 2729, 5193, 1, 1, 7, 1,
    23, 3, 119, 11, 77, 141, 1905, 2269, 4269, 1, 1, 7, 15, 1, 23, 79,
    251, 439, 603, 405, 2449, 6383, 1, 3, 7, 11, 29, 27, 47, 255, 47, 661,
    1967, 1007, 3689, 1, 3, 7, 5, 19, 39, 35, 115, 417, 373, 291, 329, 603,
    1, 3, 1, 9, 11, 33, 27, 193, 207, 423, 1311, 1369, 7307, 1, 1, 3,
    11, 9, 29, 83, 17, 497, 493, 329, 3141, 5935, 1, 3, 1, 5, 31, 51,
    29, 171, 51, 493, 1621, 3501, 4091, 1, 1, 5, 9, 21, 43, 105, 207, 245,
    363, 1191, 699, 1139, 1, 1, 3, 11, 19, 5, 81, 119, 247, 169, 1337, 45,
    6565, 1, 3, 1, 11, 3, 51, 3, 101, 159, 11, 253, 299, 5043, 1, 3,
    1, 5, 11, 53, 85, 39, 57, 645, 2007, 1039, 3627, 1, 3, 5, 3, 17,
    61, 97, 165, 415, 357, 283, 601, 5505, 1, 3, 7, 3, 9, 51, 49, 85,
    3, 227, 137, 309, 243, 1, 1, 5, 3, 11, 59, 11, 131, 409, 703, 455,
    123, 6727, 1, 3, 7, 9, 25, 49, 21, 171, 287, 379, 667, 313, 713, 1,
    1, 3, 9, 7, 35, 47, 3, 367, 581, 1627, 1665, 3905, 1, 3, 1, 1,
    29, 57, 35, 55, 255, 653, 823, 2197, 6179, 1, 3, 7, 15, 17, 15, 117,
    83, 359, 163, 115, 2999, 5373, 1, 1, 5, 3, 21, 61, 35, 97, 71, 687,
    207, 2917, 1049, 1, 1, 1, 15, 13, 15, 125, 81, 263, 661, 417, 3243, 1669,
    1, 1, 7, 3, 3, 19, 111, 193, 443, 339, 659, 1211, 1557, 1, 3, 1,
    3, 27, 3, 3, 173, 391, 213, 803, 3281, 3207, 1, 1, 5, 15, 19, 1,
    7, 211, 157, 603, 403, 1387, 1583, 1, 3, 5, 13, 17, 53, 125, 13, 339,
    723, 521, 413, 5801, 10451, 1, 1, 3, 13, 29, 9, 99, 77, 141, 609, 1533,
    983, 2039, 51, 1, 1, 3, 11, 21, 55, 5, 51, 423, 309, 525, 3715, 3025,
    15055, 1, 1, 3, 7, 9, 21, 77, 171, 239, 341, 1653, 1093, 2273, 10723, 1,
    1, 1, 15, 31, 15, 23, 35, 317, 869, 1917, 1415, 4313, 3687, 1, 1, 1,
    5, 21, 25, 99, 167, 439, 453, 473, 431, 6665, 4989, 1, 1, 7, 9, 31,
    47, 81, 83, 345, 43, 1363, 1885, 3155, 3185, 1, 3, 7, 1, 31, 17, 61,
    185, 341, 129, 547, 717, 2071, 9991, 1, 3, 1, 13, 23, 61, 77, 217, 455,
    77, 1263, 1601, 3501, 14953, 1, 1, 7, 7, 19, 19, 1, 229, 431, 943, 1069,
    1949, 1289, 15729, 1, 1, 3, 5, 1, 35, 97, 251, 487, 459, 1265, 1739, 165,
    10365, 1, 3, 5, 3, 11, 25, 79, 175, 383, 545, 187, 197, 4329, 3363, 1,
    1, 3, 3, 29, 9, 63, 55, 175, 277, 431, 2549, 2629, 6409, 1, 1, 3,
    15, 17, 21, 79, 139, 99, 135, 1763, 1805, 3471, 5439, 1, 1, 3, 9, 9,
    15, 35, 119, 289, 835, 769, 3843, 4119, 4421, 1, 1, 1, 5, 19, 19, 67,
    199, 307, 815, 1367, 1231, 3927, 6593, 1, 1, 3, 1, 29, 51, 121, 209, 431,
    47, 1115, 907, 2535, 9755, 1, 1, 3, 5, 17, 1, 5, 119, 121, 223, 1719,
    1291, 3947, 15891, 1, 3, 1, 15, 29, 25, 3, 131, 373, 307, 645, 3513, 1289,
    1987, 1, 3, 3, 11, 29, 45, 105, 179, 331, 465, 891, 1315, 403, 3057, 1,
    1, 5, 13, 17, 59, 77, 127, 485, 855, 1147, 3093, 891, 9869, 1, 1, 1,
    7, 23, 27, 31, 203, 285, 463, 827, 685, 1349, 15051, 1, 1, 1, 5, 29,
    5, 107, 195, 31, 425, 19, 2865, 3869, 11153, 1, 1, 7, 5, 7, 47, 1,
    73, 307, 347, 393, 2205, 7709, 15121, 1, 1, 1, 13, 15, 61, 25, 131, 113,
    369, 1995, 2527, 4475, 1745, 1, 1, 1, 1, 31, 63, 21, 253, 307, 281, 859,
    3319, 6721, 2891, 1, 1, 3, 11, 1, 17, 5, 183, 301, 979, 651, 1685, 6343,
    10067, 1, 1, 5, 15, 23, 45, 99, 145, 263, 507, 1381, 3425, 2215, 1815, 1,
    3, 1, 5, 11, 63, 85, 203, 411, 881, 1369, 1237, 4657, 6541, 1, 3, 3,
    13, 17, 53, 121, 201, 269, 983, 215, 3187, 7121, 6111, 1, 3, 5, 15, 15,
    5, 13, 143, 3, 313, 1677, 1093, 3295, 3387, 1, 1, 3, 13, 3, 23, 73,
    17, 257, 965, 239, 1271, 2803, 7327, 1, 3, 5, 13, 9, 57, 115, 37, 41,
    467, 135, 1403, 3811, 4741, 1, 3, 7, 15, 9, 33, 39, 203, 351, 367, 1355,
    1403, 3685, 4757, 1, 3, 5, 11, 31, 3, 113, 123, 203, 421, 1821, 3151, 2375,
    4419, 1, 1, 1, 7, 21, 63, 99, 23, 133, 79, 991, 1755, 4989, 4709, 1,
    3, 5, 1, 25, 63, 113, 239, 49, 443, 173, 1261, 3201, 10599, 1, 3, 3,
    13, 3, 25, 101, 169, 23, 585, 327, 1327, 111, 10059, 1, 3, 3, 5, 19,
    1, 33, 89, 437, 213, 1933, 1741, 2603, 5625, 1, 3, 1, 3, 15, 15, 25,
    139, 73, 335, 237, 2461, 3101, 14951, 1, 3, 5, 1, 31, 15, 31, 187, 177,
    659, 1339, 3767, 4975, 7123, 1, 3, 1, 3, 25, 19, 47, 89, 107, 107, 649,
    683, 3123, 11085, 1, 3, 7, 9, 15, 21, 101, 25, 11, 625, 1555, 675, 3893,
    5805, 1, 1, 1, 5, 7, 49, 123, 21, 439, 369, 207, 535, 4619, 14665, 1,
    1, 5, 7, 1, 25, 103, 185, 99, 239, 1093, 1561, 6177, 4039, 1, 3, 7,
    5, 29, 21, 43, 103, 343, 973, 1561, 2975, 7467, 7947, 1, 1, 7, 9, 19,
    3, 13, 23, 461, 813, 1191, 985, 559, 3317, 1, 3, 5, 5, 27, 31, 79,
    15, 365, 901, 1949, 117, 3619, 13311, 1, 3, 5, 7, 5, 33, 67, 199, 425,
    189, 1691, 3099, 815, 1677, 1, 1, 7, 11, 13, 29, 73, 137, 265, 601, 445,
    3893, 2511, 8047, 1, 1, 3, 1, 13, 5, 57, 101, 357, 391, 335, 601, 1359,
    1065, 1, 1, 1, 1, 25, 57, 27, 115, 31, 873, 611, 2125, 447, 13585, 1,
    3, 3, 13, 27, 17, 73, 11, 359, 33, 1153, 271, 4537, 15141, 1, 3, 7,
    3, 11, 63, 103, 61, 59, 629, 1629, 3279, 3919, 3177, 1, 1, 5, 15, 3,
    63, 85, 193, 381, 165, 175, 3247, 2501, 4209, 1, 1, 5, 15, 1, 33, 59,
    219, 487, 193, 1557, 703, 2907, 7953, 1, 1, 7, 3, 9, 3, 105, 95, 389,
    991, 21, 3841, 6983, 285, 1, 1, 1, 1, 1, 31, 25, 137, 117, 67, 1283,
    1963, 6591, 15541, 1, 3, 5, 11, 7, 15, 127, 89, 453, 777, 1827, 2311, 7661,
    11833, 1, 1, 7, 13, 19, 29, 79, 165, 223, 453, 2039, 3961, 6467, 5481, 1,
    3, 3, 7, 17, 41, 43, 157, 323, 3, 1001, 2109, 4513, 12127, 1, 1, 5,
    9, 31, 57, 3, 217, 113, 271, 1663, 1367, 6949, 8165, 1, 1, 7, 15, 27,
    35, 81, 235, 61, 205, 525, 311, 6357, 2527, 1, 3, 1, 9, 19, 29, 71,
    207, 321, 1011, 1615, 1333, 3459, 6681, 1, 3, 7, 7, 3, 57, 41, 19, 25,
    397, 565, 1837, 7625, 11813, 1, 3, 3, 1, 27, 47, 31, 79, 441, 961, 1255,
    423, 2405, 913, 1, 3, 3, 13, 3, 29, 69, 227, 85, 201, 395, 3199, 3869,
    13099, 1, 3, 3, 7, 29, 61, 99, 7, 27, 227, 945, 873, 475, 4363, 1,
    3, 5, 13, 19, 21, 57, 149, 217, 443, 565, 453, 5487, 10981, 1, 3, 3,
    1, 9, 27, 47, 191, 35, 395, 1429, 4079, 6871, 8013, 1, 3, 5, 15, 5,
    43, 9, 79, 279, 563, 1125, 985, 8117, 4099, 1, 3, 5, 1, 13, 41, 21,
    117, 287, 667, 701, 1483, 8167, 13283, 1, 3, 1, 3, 15, 15, 59, 5, 383,
    509, 1657, 3977, 7697, 10941, 1, 3, 1, 1, 17, 29, 19, 23, 377, 45, 981,
    1631, 3557, 6749, 1, 3, 3, 9, 9, 51, 9, 193, 345, 361, 1679, 3333, 713,
    5387, 1, 3, 5, 5, 17, 45, 97, 17, 385, 349, 105, 2245, 7295, 14393, 1,
    3, 7, 3, 19, 51, 35, 99, 79, 301, 1563, 399, 5879, 14675, 1, 1, 7,
    15, 13, 53, 55, 203, 417, 161, 2033, 1845, 6763, 3585, 1, 1, 3, 3, 7,
    23, 11, 43, 241, 309, 1453, 3147, 2619, 3163, 1, 1, 1, 11, 17, 1, 17,
    137, 443, 465, 993, 3217, 7879, 14607, 1, 1, 7, 13, 29, 49, 71, 217, 291,
    793, 135, 21, 2503, 11091, 1, 3, 1, 11, 31, 51, 121, 227, 377, 157, 1457,
    1317, 5625, 6217, 1, 1, 3, 7, 23, 61, 47, 93, 79, 617, 1805, 2403, 5513,
    16335, 1, 3, 5, 11, 23, 25, 41, 11, 495, 587, 1223, 3107, 1469, 15223, 1,
    3, 7, 7, 9, 1, 1, 49, 23, 723, 1761, 3717, 7375, 10875, 1, 3, 3,
    11, 25, 37, 57, 63, 309, 603, 183, 285, 1663, 5627, 1, 3, 7, 11, 19,
    25, 25, 201, 391, 257, 529, 1645, 1, 15111, 1, 3, 3, 9, 11, 43, 91,
    65, 5, 959, 301, 1015, 6343, 3453, 1, 3, 3, 11, 17, 17, 103, 37, 77,
    973, 575, 439, 49, 3639,
};

} // namespace svpkg::detail
