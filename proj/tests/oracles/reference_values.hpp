#pragma once

// Reference values computed with 40-digit mpmath by gen_reference_values.py.
// Regenerate with that script; do not edit by hand.

namespace tunnelsplit::reference {

struct PcfPoint {
  double nu;
  double z;
  double log_abs;
  int sign;
};

inline constexpr PcfPoint kPcfTable[] = {
    {-40, -60, 954.17034149490672835, 1},
    {-40, -30, 252.72507668046918253, 1},
    {-40, -12, 31.385408648749509409, 1},
    {-40, -8.8, 5.3197150753908699311, 1},
    {-40, -7.2, -6.5753868198901402581, 1},
    {-40, -5.65, -17.495375191216135411, 1},
    {-40, -3, -35.103014524404253777, 1},
    {-40, -1, -47.831880906827288993, 1},
    {-40, 0, -54.122079642805004211, 1},
    {-40, 0.7, -58.524733614247025677, 1},
    {-40, 2.5, -69.947611004351745461, 1},
    {-40, 4.4, -82.360277969216146244, 1},
    {-40, 7.2, -101.8106162642439079, 1},
    {-40, 8.8, -113.76326806456717052, 1},
    {-40, 12, -139.9534417805391581, 1},
    {-40, 25, -286.23846066792709674, 1},
    {-40, 60, -1063.9989842135616908, 1},
    {-17.25, -60, 936.11169366849370116, 1},
    {-17.25, -30, 249.94924907123502006, 1},
    {-17.25, -12, 46.708575158271534911, 1},
    {-17.25, -8.8, 25.60818305756283372, 1},
    {-17.25, -7.2, 16.496827749814369903, 1},
    {-17.25, -5.65, 8.4735265155008680099, 1},
    {-17.25, -3, -3.7606532186344868286, 1},
    {-17.25, -1, -12.179096162388221129, 1},
    {-17.25, 0, -16.279126182112339322, 1},
    {-17.25, 0.7, -19.149936706233147613, 1},
    {-17.25, 2.5, -26.692017422248741116, 1},
    {-17.25, 4.4, -35.186211373407331511, 1},
    {-17.25, 7.2, -49.341394206959472924, 1},
    {-17.25, 8.8, -58.550282645657880703, 1},
    {-17.25, 12, -79.840172144856789176, 1},
    {-17.25, 25, -212.02026494211551413, 1},
    {-17.25, 60, -970.67094192484911271, 1},
    {-2.5, -60, 906.77587667273358234, 1},
    {-2.5, -30, 230.73646840202068525, 1},
    {-2.5, -12, 40.36421983615554599, 1},
    {-2.5, -8.8, 23.261225913894401978, 1},
    {-2.5, -7.2, 16.562611714391655967, 1},
    {-2.5, -5.65, 11.224114390128989164, 1},
    {-2.5, -3, 4.5740520378779877435, 1},
    {-2.5, -1, 1.2240064265857958498, 1},
    {-2.5, 0, -0.20966791175474599374, 1},
    {-2.5, 0.7, -1.2361015418255596404, 1},
    {-2.5, 2.5, -4.325779230262081643, 1},
    {-2.5, 4.4, -8.7353066534414657483, 1},
    {-2.5, 7.2, -17.973866230014651324, 1},
    {-2.5, 8.8, -24.850703578698737903, 1},
    {-2.5, 12, -42.241845149253741813, 1},
    {-2.5, 25, -164.30414528383654867, 1},
    {-2.5, 60, -910.2370753357906396, 1},
    {-1, -60, 900.91893853320467274, 1},
    {-1, -30, 225.91893853320467274, 1},
    {-1, -12, 36.918938533204672742, 1},
    {-1, -8.8, 20.278938533204675867, 1},
    {-1, -7.2, 13.878938533204372318, 1},
    {-1, -5.65, 8.8995635251822818626, 1},
    {-1, -3, 3.167587723239924548, 1},
    {-1, -1, 0.99618475418122285225, 1},
    {-1, 0, 0.22579135264472743236, 1},
    {-1, 0.7, -0.3775292283268588531, 1},
    {-1, 2.5, -2.6002097440740177566, 1},
    {-1, 4.4, -6.367852819186048938, 1},
    {-1, 7.2, -14.952518987117205669, 1},
    {-1, 8.8, -21.547272426279835982, 1},
    {-1, 12, -38.491734468364123197, 1},
    {-1, 25, -159.47046947481558619, 1},
    {-1, 60, -904.09462214736246596, 1},
    {-0.5, -60, 898.29950553377238327, 1},
    {-0.5, -30, 223.64639249631473263, 1},
    {-0.5, -12, 35.10676168432961678, 1},
    {-0.5, -8.8, 18.624172510356075621, 1},
    {-0.5, -7.2, 12.327071338237649974, 1},
    {-0.5, -5.65, 7.4739749323835555724, 1},
    {-0.5, -3, 2.1054893852387314615, 1},
    {-0.5, -1, 0.60453092495703102934, 1},
    {-0.5, 0, 0.19579719635341838824, 1},
    {-0.5, 0.7, -0.20556097140372553698, 1},
    {-0.5, 2.5, -2.0682887025555274597, 1},
    {-0.5, 4.4, -5.598499878474178955, 1},
    {-0.5, 7.2, -13.954015138089611964, 1},
    {-0.5, 8.8, -20.452099435742728201, 1},
    {-0.5, 12, -37.245022316556560082, 1},
    {-0.5, 25, -157.86003600498237947, 1},
    {-0.5, 60, -902.04727638997354283, 1},
    {0, -60, -900.0, 1},
    {0, -30, -225.0, 1},
    {0, -12, -36.0, 1},
    {0, -8.8, -19.360000000000003126, 1},
    {0, -7.2, -12.960000000000000639, 1},
    {0, -5.65, -7.9806250000000010036, 1},
    {0, -3, -2.25, 1},
    {0, -1, -0.25, 1},
    {0, 0, 0.0, 1},
    {0, 0.7, -0.12249999999999998446, 1},
    {0, 2.5, -1.5625, 1},
    {0, 4.4, -4.8400000000000007816, 1},
    {0, 7.2, -12.960000000000000639, 1},
    {0, 8.8, -19.360000000000003126, 1},
    {0, 12, -36.0, 1},
    {0, 25, -156.25, 1},
    {0, 60, -900.0, 1},
    {0.001, -60, 889.91244469702207813, -1},
    {0.001, -30, 215.60712252435865927, -1},
    {0.001, -12, 27.530293676050941811, -1},
    {0.001, -8.8, 11.207058435263129613, -1},
    {0.001, -7.2, 5.0149050174371791328, -1},
    {0.001, -5.65, 0.29192461931904571131, -1},
    {0.001, -3, -2.3415076504855472564, 1},
    {0.001, -1, -0.25273213169632514987, 1},
    {0.001, 0, -0.00063579862385960785109, 1},
    {0.001, 0.7, -0.12244727265501595282, 1},
    {0.001, 2.5, -1.5615170186452386879, 1},
    {0.001, 4.4, -4.8384943179194903062, 1},
    {0.001, 7.2, -12.958016545865162845, 1},
    {0.001, 8.8, -19.357818917940659561, 1},
    {0.001, 12, -35.997511659902492893, 1},
    {0.001, 25, -156.24678032688179974, 1},
    {0.001, 60, -899.99590551674549847, 1},
    {0.3, -60, 894.13186615271751489, -1},
    {0.3, -30, 220.03420819660706774, -1},
    {0.3, -12, 32.234311695018519623, -1},
    {0.3, -8.8, 16.006979048688595808, -1},
    {0.3, -7.2, 9.8783829849248493852, -1},
    {0.3, -5.65, 5.2354689798396270911, -1},
    {0.3, -3, 0.47386497135967879638, -1},
    {0.3, -1, -1.7988692953099200804, 1},
    {0.3, 0, -0.25824420713754066044, 1},
    {0.3, 0.7, -0.13254422548763898808, 1},
    {0.3, 2.5, -1.273137505847231307, 1},
    {0.3, 4.4, -4.3903905642808888649, 1},
    {0.3, 7.2, -12.365794725600368785, 1},
    {0.3, 8.8, -18.70623886968546118, 1},
    {0.3, 12, -35.253804797277680398, 1},
    {0.3, 25, -155.28416957362686798, 1},
    {0.3, 60, -898.7716674743811713, 1},
    {1, -60, -895.90565543777789932, -1},
    {1, -30, -221.59880261833784462, -1},
    {1, -12, -33.51509335021199969, -1},
    {1, -8.8, -17.185248278515842257, -1},
    {1, -7.2, -10.985918973977990988, -1},
    {1, -5.65, -6.2489694548416513656, -1},
    {1, -3, -1.1513877113318903086, -1},
    {1, -1, -0.25, -1},
    {1, 0.7, -0.47917494393873242681, 1},
    {1, 2.5, -0.64620926812584493482, 1},
    {1, 4.4, -3.358395459075785222, 1},
    {1, 7.2, -10.985918973977990988, 1},
    {1, 8.8, -17.185248278515842257, 1},
    {1, 12, -33.51509335021199969, 1},
    {1, 25, -153.03112417513179925, 1},
    {1, 60, -895.90565543777789932, 1},
    {2.7, -60, 885.84368951393444207, -1},
    {2.7, -30, 213.4156328274111282, -1},
    {2.7, -12, 27.858909479160598184, -1},
    {2.7, -8.8, 12.424685755727492442, -1},
    {2.7, -7.2, 6.8349364648864095777, -1},
    {2.7, -5.65, 2.9066206634449656763, -1},
    {2.7, -3, 0.44962387918065464897, -1},
    {2.7, -1, 0.2911065634742904846, 1},
    {2.7, 0, -0.48221906903198353573, -1},
    {2.7, 0.7, 0.30510799615824519299, -1},
    {2.7, 2.5, 0.44931234132931303615, 1},
    {2.7, 4.4, -0.96620335125366308657, 1},
    {2.7, 7.2, -7.6753084101891441875, 1},
    {2.7, 8.8, -13.518274789539072181, 1},
    {2.7, 12, -29.306823797740910444, 1},
    {2.7, 25, -147.56271434053604767, 1},
    {2.7, 60, -888.94590739459137353, 1},
    {5, -60, -879.53105767122066345, -1},
    {5, -30, -208.00516766587092848, -1},
    {5, -12, -23.646663189491274137, -1},
    {5, -8.8, -8.6216384804475998407, -1},
    {5, -7.2, -3.2970122305415252247, -1},
    {5, -5.65, 0.32306271560274964887, -1},
    {5, -3, 0.64037175789616469221, -1},
    {5, -1, 1.5417594692280550008, -1},
    {5, 0.7, 1.8568545962746690869, 1},
    {5, 2.5, 1.4864767880728032763, -1},
    {5, 4.4, 1.9207880165220695627, 1},
    {5, 7.2, -3.2970122305415252247, 1},
    {5, 8.8, -8.6216384804475998407, 1},
    {5, 12, -23.646663189491274137, 1},
    {5, 25, -140.17171123396006769, 1},
    {5, 60, -879.53105767122066345, 1},
    {9.9, -60, 868.85928627619845806, 1},
    {9.9, -30, 201.4695911038880482, 1},
    {9.9, -12, 22.880439152826757915, 1},
    {9.9, -8.8, 10.15810506984446221, 1},
    {9.9, -7.2, 7.0379582266510286686, 1},
    {9.9, -5.65, 7.0279603282986482459, 1},
    {9.9, -3, 6.7623284272075096034, 1},
    {9.9, -1, 6.7386717550576765765, 1},
    {9.9, 0, 6.7238348425780681381, -1},
    {9.9, 0.7, 6.4448513464089615723, 1},
    {9.9, 2.5, 4.9667198499733096674, 1},
    {9.9, 4.4, 6.6950134025459203683, -1},
    {9.9, 7.2, 5.5431710309638480411, 1},
    {9.9, 8.8, 1.5258816833536460946, 1},
    {9.9, 12, -11.725077090754094846, 1},
    {9.9, 25, -124.45458548827482329, 1},
    {9.9, 60, -859.47825499463926273, 1},
    {20.5, -60, 855.66534789079956564, -1},
    {20.5, -30, 195.7763242040441034, -1},
    {20.5, -12, 28.265643681887686825, -1},
    {20.5, -8.8, 21.016397974902760786, -1},
    {20.5, -7.2, 19.331840926509684371, 1},
    {20.5, -5.65, 21.151284081887929545, 1},
    {20.5, -3, 19.170120017724336244, -1},
    {20.5, -1, 20.548857533205199308, 1},
    {20.5, 0, 20.705292292595285048, 1},
    {20.5, 0.7, 20.766422172312580137, -1},
    {20.5, 2.5, 20.272001580839322859, -1},
    {20.5, 4.4, 21.079946253691182521, 1},
    {20.5, 7.2, 21.279667991324189897, -1},
    {20.5, 8.8, 21.433803677488657947, 1},
    {20.5, 12, 13.314755901577833648, 1},
    {20.5, 25, -90.593081766948158871, 1},
    {20.5, 60, -816.12175288600291596, 1},
    {39.5, -60, 842.66254472141215037, 1},
    {39.5, -30, 196.47992276660252344, 1},
    {39.5, -12, 50.004571528199024674, -1},
    {39.5, -8.8, 53.326887138058281306, 1},
    {39.5, -7.2, 51.910633436107161228, -1},
    {39.5, -5.65, 52.859488645963002819, -1},
    {39.5, -3, 52.811712913281721126, 1},
    {39.5, -1, 52.890221444579749169, 1},
    {39.5, 0, 52.854828880771596103, 1},
    {39.5, 0.7, 52.463536260222642939, 1},
    {39.5, 2.5, 52.864260620299446518, -1},
    {39.5, 4.4, 53.206602715204262603, -1},
    {39.5, 7.2, 53.267102051050725496, 1},
    {39.5, 8.8, 52.080293927141946863, 1},
    {39.5, 12, 53.752851856796071362, 1},
    {39.5, 25, -30.403476616021911557, 1},
    {39.5, 60, -738.48687424359099844, 1},
    {40, -60, -736.44524310687656276, 1},
    {40, -30, -89.858717927422851167, 1},
    {40, -12, 54.633162592790826225, 1},
    {40, -8.8, 53.823310928428628645, 1},
    {40, -7.2, 53.919004666376450213, 1},
    {40, -5.65, 54.160227940750788335, -1},
    {40, -3, 54.13426072506049847, 1},
    {40, -1, 54.120851882504735354, 1},
    {40, 0, 54.122079642805004211, 1},
    {40, 0.7, 52.763314735135196405, -1},
    {40, 2.5, 54.126936132002413004, -1},
    {40, 4.4, 53.749818248109715218, -1},
    {40, 7.2, 53.919004666376450213, 1},
    {40, 8.8, 53.823310928428628645, 1},
    {40, 12, 54.633162592790826225, 1},
    {40, 25, -28.828815919404134096, 1},
    {40, 60, -736.44524310687656276, 1},
};

struct GFactor {
  int k;
  double value;
};

inline constexpr GFactor kGFactors[] = {
    {0, 1.0750476034999202387},
    {1, 1.0275077350271945523},
    {2, 1.0166553617814060771},
    {5, 1.0075899565327091143},
    {100, 1.0004146772586448744},
};

inline constexpr double kD_half_at_0 = 0.58136831701911858184;
inline constexpr double kD_1_at_2 = 0.73575888234288464319;

// Matching-condition roots of the piecewise-quadratic double well,
// parameterised by (alpha, n, eps, l).
struct VdRoots {
  double alpha;
  int n;
  double eps;
  int l;
  double nu_minus;
  double nu_plus;
};

inline constexpr VdRoots kVdRoots[] = {
    {3, 0, 0, 0, -0.00022433793798936422334, 0.00019541198989169773467},
    {4, 0, 0, 0, -2.6311667796668034132e-7, 2.4542797400873817427e-7},
    {5, 0, 0, 0, -4.0031467632946901686e-11, 3.8358565987986960589e-11},
    {4, 1, 0, 0, -5.8877067626785790123e-7, 5.3533661428285439601e-7},
    {4, 0, 0, 1, 0.99999203458111231628, 1.0000073013471820232},
    {3, 1, 0, 0, -0.00039382609773517376599, 0.00033328394672491409438},
};

}  // namespace tunnelsplit::reference
