"""Expected values frozen from the mpmath oracles in ``oracle.py``.

``test_frozen_values.py`` recomputes each entry; other tests use them directly.
"""

LOG_RATIO_HALF = 1.0986122886681097  # ln 3
LOG_RATIO_0_9 = 2.9444389791664405  # ln 19
S_HALF_K1 = 0.54166666666666667

ZETA_2 = 1.6449340668482264
ZETA_4 = 1.0823232337111382
ZETA_6 = 1.0173430619844491
ZETA_10 = 1.0009945751278181

I_SUMS = [1.2337005501361698, 1.0014470766409421, 1.0000170413630448, 1.0000002092405192]
I_UPPER_1 = 1.0161290322580645  # 63/62

LEMMA_HALF = [0.54930614433405485, 0.51232653608351371, 0.51089413402087843]  # k0 = -1, 0, 1
LEMMA_LHS_HALF = 0.51082562376599068  # ln(5/3)
RATIO_BOUND_HALF_K0 = 1.6691700654169233
RATIO_BOUND_0_9_K2 = 10.132244709830041
LHS_0_1_0_9 = 0.18048837571229366  # ln(1.09/0.91)
GAPS_HALF = [
    0.036979608250541134,
    0.0014324020626352836,
    6.5131765658820892e-5,
    3.2039793611337944e-6,
    1.6521196267928195e-7,
]  # a_k - a_{k+1}, k = -1..3

COSHCOS_B_HALF_ONE = [
    1.2999838290752774,
    1.2850170529997835,
    1.2849236381072244,
    1.2849229452665501,
]  # k0 = -1..2 at (x, alpha) = (0.5, 1)
SINHSIN_B_HALF_ONE = [1.0870969308299661, 1.086916103600349]  # k0 = -1, 0

COSHCOS = {0.3: 1.0942097638138274, 0.5: 1.2849229396461542, 0.8: 1.9196527439186861,
           1.0: 2.8559578925651137, 1.3: 7.3679359287686614}
SINHSIN = {0.5: 1.08691603499234, 1.0: 1.3966033468308997}

LIMIT_HALF = 1.2851311906056791
LIMIT_ONE = 2.8888962015040448
LIMIT_MARGIN_HALF = 0.0002082509595248342

BETA = {0.5: 1.002794989608001, 1.0: 1.0494073008690414, 1.4: 1.2949162160192475,
        1.5: 1.5574328111076585}

PRODUCT_HALF = {1: 1.225489199919036, 3: 1.2635972581926614}
