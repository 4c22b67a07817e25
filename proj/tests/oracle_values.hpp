// Generated by tests/oracles/generate_oracles.py (mpmath, 50 digits). Do not edit.
#pragma once

namespace wracah::oracle {

struct LogGammaPoint { double re, im, log_abs, arg; };
inline constexpr LogGammaPoint kLogGammaTable[] = {
    {0.8, 0.3, 0.053347686687565184359, -0.27094481637976997392},
    {1.0, 1.0, -0.65092319930185633889, -0.30164032046753319789},
    {0.5, 0.0, 0.57236494292470008707, 0.0},
    {2.5, -3.7, -2.19121083662926992, 2.5089297445658406259},
    {-3.3, 2.1, -6.3891746803951294525, -2.7484442211574916289},
    {-0.7, -0.4, 0.71204736142795288844, -2.6779953202291696939},
    {50.0, 50.0, 122.45039518977270495, 0.74427571605539936564},
    {-60.0, 70.0, -372.33783026465333328, 1.9538467572343724132},
    {99.0, 1.0, 354.53400950809723452, -1.6931072873702408884},
    {0.1, 99.0, -156.42794514735356518, -2.8534030841844012874},
    {-70.0, -70.0, -417.9676236995971516, 2.4220828320918727938},
    {0.25, 0.0, 1.2880225246980774574, 0.0},
    {7.5, 0.0, 7.5343642367587329552, 0.0},
    {-2.5, 0.0, -0.056243716497674050673, 3.1415926535897932385},
    {0.0, 3.0, -4.342756588257865883, -0.51744555572628341891},
    {0.0, 0.001, 6.9077544565153741878, -1.5713735420591127251},
    {3.0, 40.0, -52.689155060822636631, -1.6922031137725910868},
};
inline constexpr double kAbsGammaSqOnePlusI = 2.7202905498213316295e-1;
inline constexpr double kWilson4F3DegreeTwo = 1.7771821157237823904e-1;
inline constexpr double kWilsonTildeDegreeTwo = 3.7619391025641025641e-1;
inline constexpr double kWilsonTildeDegreeFiveY07 = -1.6959301211533829715e-1;
inline constexpr double kWilsonOrthonormalDegreeTwo = 5.1004817106723822578e-1;
inline constexpr double kHyp2F1Truncated30 = 1.0426887063478086567;
inline constexpr double kRacahTildeN2M3 = 8.0830188679245283019e-1;
struct PhasePoint { double y, delta, abs_amplitude; };
inline constexpr PhasePoint kPhaseTable[] = {
    {0.1, -1.3769153457838145329, 3.713986182440835349},
    {0.5, -0.57321816472837456071, 0.93916902177692327107},
    {1, 0.22992037557492762607, 1.0565514036972989234},
    {2.5, 0.63871682363934593447, 16.928666944501779757},
    {7, -0.53533994954874514234, 2680933.4642422743169},
    {10, -2.9078867363121280202, 15705375648.906829957},
};

}  // namespace wracah::oracle
