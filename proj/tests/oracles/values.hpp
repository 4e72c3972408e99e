#pragma once

// frozen mpmath values (40-digit working precision)

namespace oracle {

struct GammaCase { double x, value; };
inline constexpr GammaCase gamma_cases[] = {
  {1.0000000000000000555e-1, 9.5135076986687312858},
  {5.0e-1, 1.7724538509055160273},
  {1.6999999999999999556, 9.0863873285329044156e-1},
  {4.25, 8.2850851418352201659},
  {1.25e+1, 1.3684336546556585726e+8},
  {3.0300000000000000711e+1, 2.4442850291542563295e+31},
  {-5.0e-1, -3.5449077018110320546},
  {-2.7000000000000001776, -9.3108278483896396546e-1},
  {3.0000000000000000625e-3, 3.3275907669553345008e+2},
};

struct HypCase { double a, b, c, x, value; };
inline constexpr HypCase hyp2f1_cases[] = {
  {5.0e-1, 5.0e-1, 1.0, 2.999999999999999889e-1, 1.0910959103627815623},
  {1.1999999999999999556, -6.9999999999999995559e-1, 2.2999999999999998224, 9.4999999999999995559e-1, 5.9913724625604501608e-1},
  {2.999999999999999889e-1, 8.0000000000000004441e-1, 1.1000000000000000888, 9.9899999999999999911e-1, 2.7923393479911394389},
  {2.0, 3.0, 4.0, 9.000000000000000222e-1, 2.1789423102929670941e+1},
  {2.5e-1, 7.5e-1, 1.5, -5.999999999999999778e-1, 9.3970042046628125334e-1},
  {-3.0, 2.5, 1.5, 6.9999999999999995559e-1, -9.9000000000000017319e-2},
  {1.5, 2.5, 3.5, 5.0e-1, 2.0337170231396293674},
  {4.000000000000000222e-1, 9.000000000000000222e-1, 2.2999999999999998224, 9.9999000000000004551e-1, 1.3671753381222097441},
  {-2.5e-1, 1.75, 5.0e-1, 8.0000000000000004441e-1, -1.2828395161491384281},
  {1.0, 1.0, 2.0, 7.5e-1, 1.8483924814931874918},
  {6.9999999999999995559e-1, -4.000000000000000222e-1, 1.3000000000000000444, -3.0, 1.44057252922775572},
};

struct HypComplementCase { double a, b, c, w, value; };
inline constexpr HypComplementCase hyp2f1_complement_cases[] = {
  {2.999999999999999889e-1, 8.0000000000000004441e-1, 1.1000000000000000888, 1.0000000000000000208e-3, 2.7923393479911396755},
  {2.999999999999999889e-1, 8.0000000000000004441e-1, 1.1000000000000000888, 9.9999999999999995475e-7, 4.6787003666862390239},
  {2.999999999999999889e-1, 8.0000000000000004441e-1, 1.1000000000000000888, 1.0000000000000000364e-10, 7.1945141244088979},
  {5.0e-1, 1.5, 2.0, 1.0000000000000000209e-8, 1.2218814927014907155e+1},
  {1.1999999999999999556, 4.000000000000000222e-1, 1.1000000000000000888, 1.0000000000000000818e-5, 2.6206125456378342045e+2},
};

struct RLCase { double sigma, ea, eb, a, b, x, left, right; };
inline constexpr RLCase rl_cases[] = {
  {5.0e-1, 0.0, 0.0, 0.0, 1.0, 2.999999999999999889e-1, 6.1803872323710331711e-1, 9.4406974388262962404e-1},
  {2.999999999999999889e-1, -4.000000000000000222e-1, 6.9999999999999995559e-1, 0.0, 2.0, 1.1000000000000000888, 1.6144105619606265814, 7.5562589845839711781e-1},
  {1.3999999999999999112, 2.5e-1, -5.999999999999999778e-1, -1.0, 1.0, 8.0000000000000004441e-1, 1.6570271542714666232, 7.7710352376580051812e-1},
  {7.5e-1, 1.5, 0.0, 2.0, 3.0, 2.8999999999999999112, 4.1140373589813844917e-1, 1.7720937686321285116e-1},
  {2.000000000000000111e-1, -8.0000000000000004441e-1, -8.0000000000000004441e-1, 0.0, 1.0, 5.0000000000000002776e-2, 1.2748554026313921499e+1, 8.9083085925404007635},
};

struct PVCase { double ea, eb, c0, c1, a, b, x, value; };
inline constexpr PVCase pv_cases[] = {
  {0.0, 0.0, 0.0, 1.0, 0.0, 1.0, 2.999999999999999889e-1, 3.9922087183487671586e-1},
  {-5.0e-1, -5.0e-1, 1.0, 0.0, 0.0, 1.0, 2.000000000000000111e-1, 4.9911173733047894306e-23},
  {2.999999999999999889e-1, -5.999999999999999778e-1, 2.0, -1.0, -1.0, 2.0, 4.000000000000000222e-1, -9.4118405932729952031e-1},
  {-2.5e-1, 5.0e-1, 1.0, 5.0e-1, 0.0, 1.0, 9.000000000000000222e-1, -8.9517447218543464801e-1},
  {5.0e-1, 5.0e-1, 1.0, 0.0, 0.0, 1.0, 5.0e-1, -9.5830443390161814855e-48},
  {-6.9999999999999995559e-1, 2.000000000000000111e-1, 1.0, 3.0, 1.0, 4.0, 1.5, 5.1001661227861371271e-1},
};

struct ExponentCase { double g1, g2, t, p, q; };
inline constexpr ExponentCase exponent_cases[] = {
  {6.9999999999999995559e-1, 2.999999999999999889e-1, 4.000000000000000222e-1, -2.9002646275456021935e-1, -1.0997353724543980286e-1},
  {5.0e-1, 5.0e-1, 5.999999999999999778e-1, -2.999999999999999889e-1, -2.999999999999999889e-1},
  {9.000000000000000222e-1, 1.0000000000000000555e-1, 2.5e-1, -2.2685384165092655201e-1, -2.3146158349073447986e-2},
  {2.000000000000000111e-1, 1.3000000000000000444, 8.0000000000000004441e-1, -3.2760033471475677471e-2, -7.6723996652852436694e-1},
};

struct ThetaCase { double alpha, mu, theta_over_2pi; };
inline constexpr ThetaCase theta_cases[] = {
  {5.0e-1, 5.0e-1, 7.5e-1},
  {6.9999999999999995559e-1, 2.999999999999999889e-1, 8.6185267014734530403e-1},
  {2.999999999999999889e-1, 4.000000000000000222e-1, 5.398049787086542376e-1},
  {9.000000000000000222e-1, 8.0000000000000004441e-1, 9.809487131150554027e-1},
  {1.0000000000000000555e-1, 2.000000000000000111e-1, 2.2280284205218339797e-1},
};

struct ThresholdCase { double mu, t, value; };
inline constexpr ThresholdCase threshold_cases[] = {
  {2.999999999999999889e-1, 1.3999999999999999889, 1.7557050458494626146e-1},
  {5.0e-1, 1.6, 1.5838444032453629384e-1},
  {6.9999999999999995559e-1, 1.7999999999999999556, 2.2123174208247426407e-1},
};

struct SymmetricCase { double mu, c; };
inline constexpr SymmetricCase symmetric_cases[] = {
  {2.999999999999999889e-1, -1.8879461628628454328},
  {5.0e-1, -1.0638460810704871412},
  {8.0000000000000004441e-1, -6.2718043660733061135e-1},
};

} // namespace oracle
