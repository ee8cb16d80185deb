#include "robplam/reference_tables.hpp"

// Published Monte Carlo summaries (500 replications, n = 100) that the
// bench-tables command compares its reproduced values against.

namespace robplam {

namespace {

// clang-format off
constexpr ReferenceCell kCells[] = {
    {"ise", "mise5", 1, Contamination::C0, 1, Method::LS, 0.002},
    {"ise", "mise5", 1, Contamination::C0, 1, Method::MM, 0.003},
    {"ise", "mise5", 1, Contamination::C0, 2, Method::LS, 0.003},
    {"ise", "mise5", 1, Contamination::C0, 2, Method::MM, 0.003},
    {"ise", "mise5", 1, Contamination::C0, 3, Method::LS, 0.007},
    {"ise", "mise5", 1, Contamination::C0, 3, Method::MM, 0.008},
    {"ise", "mise5", 1, Contamination::C0, 4, Method::LS, 0.002},
    {"ise", "mise5", 1, Contamination::C0, 4, Method::MM, 0.003},
    {"ise", "mise5", 1, Contamination::C0, 5, Method::LS, 0.002},
    {"ise", "mise5", 1, Contamination::C0, 5, Method::MM, 0.003},
    {"ise", "mise5", 1, Contamination::C0, 6, Method::LS, 0.003},
    {"ise", "mise5", 1, Contamination::C0, 6, Method::MM, 0.003},
    {"ise", "medise", 1, Contamination::C0, 1, Method::LS, 0.002},
    {"ise", "medise", 1, Contamination::C0, 1, Method::MM, 0.002},
    {"ise", "medise", 1, Contamination::C0, 2, Method::LS, 0.002},
    {"ise", "medise", 1, Contamination::C0, 2, Method::MM, 0.003},
    {"ise", "medise", 1, Contamination::C0, 3, Method::LS, 0.005},
    {"ise", "medise", 1, Contamination::C0, 3, Method::MM, 0.006},
    {"ise", "medise", 1, Contamination::C0, 4, Method::LS, 0.002},
    {"ise", "medise", 1, Contamination::C0, 4, Method::MM, 0.002},
    {"ise", "medise", 1, Contamination::C0, 5, Method::LS, 0.002},
    {"ise", "medise", 1, Contamination::C0, 5, Method::MM, 0.002},
    {"ise", "medise", 1, Contamination::C0, 6, Method::LS, 0.003},
    {"ise", "medise", 1, Contamination::C0, 6, Method::MM, 0.003},
    {"ise", "mise5", 1, Contamination::C1, 1, Method::LS, 0.019},
    {"ise", "mise5", 1, Contamination::C1, 1, Method::MM, 0.003},
    {"ise", "mise5", 1, Contamination::C1, 2, Method::LS, 0.023},
    {"ise", "mise5", 1, Contamination::C1, 2, Method::MM, 0.004},
    {"ise", "mise5", 1, Contamination::C1, 3, Method::LS, 0.081},
    {"ise", "mise5", 1, Contamination::C1, 3, Method::MM, 0.009},
    {"ise", "mise5", 1, Contamination::C1, 4, Method::LS, 0.019},
    {"ise", "mise5", 1, Contamination::C1, 4, Method::MM, 0.003},
    {"ise", "mise5", 1, Contamination::C1, 5, Method::LS, 0.019},
    {"ise", "mise5", 1, Contamination::C1, 5, Method::MM, 0.003},
    {"ise", "mise5", 1, Contamination::C1, 6, Method::LS, 0.022},
    {"ise", "mise5", 1, Contamination::C1, 6, Method::MM, 0.004},
    {"ise", "medise", 1, Contamination::C1, 1, Method::LS, 0.014},
    {"ise", "medise", 1, Contamination::C1, 1, Method::MM, 0.003},
    {"ise", "medise", 1, Contamination::C1, 2, Method::LS, 0.018},
    {"ise", "medise", 1, Contamination::C1, 2, Method::MM, 0.003},
    {"ise", "medise", 1, Contamination::C1, 3, Method::LS, 0.056},
    {"ise", "medise", 1, Contamination::C1, 3, Method::MM, 0.007},
    {"ise", "medise", 1, Contamination::C1, 4, Method::LS, 0.014},
    {"ise", "medise", 1, Contamination::C1, 4, Method::MM, 0.003},
    {"ise", "medise", 1, Contamination::C1, 5, Method::LS, 0.014},
    {"ise", "medise", 1, Contamination::C1, 5, Method::MM, 0.003},
    {"ise", "medise", 1, Contamination::C1, 6, Method::LS, 0.016},
    {"ise", "medise", 1, Contamination::C1, 6, Method::MM, 0.003},
    {"ise", "mise5", 1, Contamination::C2, 1, Method::LS, 1.175},
    {"ise", "mise5", 1, Contamination::C2, 1, Method::MM, 0.003},
    {"ise", "mise5", 1, Contamination::C2, 2, Method::LS, 1.484},
    {"ise", "mise5", 1, Contamination::C2, 2, Method::MM, 0.003},
    {"ise", "mise5", 1, Contamination::C2, 3, Method::LS, 4.866},
    {"ise", "mise5", 1, Contamination::C2, 3, Method::MM, 0.008},
    {"ise", "mise5", 1, Contamination::C2, 4, Method::LS, 1.127},
    {"ise", "mise5", 1, Contamination::C2, 4, Method::MM, 0.003},
    {"ise", "mise5", 1, Contamination::C2, 5, Method::LS, 1.147},
    {"ise", "mise5", 1, Contamination::C2, 5, Method::MM, 0.003},
    {"ise", "mise5", 1, Contamination::C2, 6, Method::LS, 1.432},
    {"ise", "mise5", 1, Contamination::C2, 6, Method::MM, 0.003},
    {"ise", "medise", 1, Contamination::C2, 1, Method::LS, 0.92},
    {"ise", "medise", 1, Contamination::C2, 1, Method::MM, 0.003},
    {"ise", "medise", 1, Contamination::C2, 2, Method::LS, 1.254},
    {"ise", "medise", 1, Contamination::C2, 2, Method::MM, 0.003},
    {"ise", "medise", 1, Contamination::C2, 3, Method::LS, 3.561},
    {"ise", "medise", 1, Contamination::C2, 3, Method::MM, 0.006},
    {"ise", "medise", 1, Contamination::C2, 4, Method::LS, 0.87},
    {"ise", "medise", 1, Contamination::C2, 4, Method::MM, 0.003},
    {"ise", "medise", 1, Contamination::C2, 5, Method::LS, 0.855},
    {"ise", "medise", 1, Contamination::C2, 5, Method::MM, 0.003},
    {"ise", "medise", 1, Contamination::C2, 6, Method::LS, 1.129},
    {"ise", "medise", 1, Contamination::C2, 6, Method::MM, 0.003},
    {"ise", "mise5", 1, Contamination::C3, 1, Method::LS, 0.063},
    {"ise", "mise5", 1, Contamination::C3, 1, Method::MM, 0.003},
    {"ise", "mise5", 1, Contamination::C3, 2, Method::LS, 0.66},
    {"ise", "mise5", 1, Contamination::C3, 2, Method::MM, 0.004},
    {"ise", "mise5", 1, Contamination::C3, 3, Method::LS, 2.553},
    {"ise", "mise5", 1, Contamination::C3, 3, Method::MM, 0.009},
    {"ise", "mise5", 1, Contamination::C3, 4, Method::LS, 0.038},
    {"ise", "mise5", 1, Contamination::C3, 4, Method::MM, 0.003},
    {"ise", "mise5", 1, Contamination::C3, 5, Method::LS, 0.009},
    {"ise", "mise5", 1, Contamination::C3, 5, Method::MM, 0.003},
    {"ise", "mise5", 1, Contamination::C3, 6, Method::LS, 0.281},
    {"ise", "mise5", 1, Contamination::C3, 6, Method::MM, 0.003},
    {"ise", "medise", 1, Contamination::C3, 1, Method::LS, 0.054},
    {"ise", "medise", 1, Contamination::C3, 1, Method::MM, 0.003},
    {"ise", "medise", 1, Contamination::C3, 2, Method::LS, 0.664},
    {"ise", "medise", 1, Contamination::C3, 2, Method::MM, 0.003},
    {"ise", "medise", 1, Contamination::C3, 3, Method::LS, 2.564},
    {"ise", "medise", 1, Contamination::C3, 3, Method::MM, 0.007},
    {"ise", "medise", 1, Contamination::C3, 4, Method::LS, 0.031},
    {"ise", "medise", 1, Contamination::C3, 4, Method::MM, 0.003},
    {"ise", "medise", 1, Contamination::C3, 5, Method::LS, 0.008},
    {"ise", "medise", 1, Contamination::C3, 5, Method::MM, 0.003},
    {"ise", "medise", 1, Contamination::C3, 6, Method::LS, 0.28},
    {"ise", "medise", 1, Contamination::C3, 6, Method::MM, 0.003},
    {"ise", "mise5", 2, Contamination::C0, 1, Method::LS, 0.002},
    {"ise", "mise5", 2, Contamination::C0, 1, Method::MM, 0.002},
    {"ise", "mise5", 2, Contamination::C0, 2, Method::LS, 0.002},
    {"ise", "mise5", 2, Contamination::C0, 2, Method::MM, 0.002},
    {"ise", "mise5", 2, Contamination::C0, 3, Method::LS, 0.005},
    {"ise", "mise5", 2, Contamination::C0, 3, Method::MM, 0.006},
    {"ise", "mise5", 2, Contamination::C0, 4, Method::LS, 0.002},
    {"ise", "mise5", 2, Contamination::C0, 4, Method::MM, 0.002},
    {"ise", "mise5", 2, Contamination::C0, 5, Method::LS, 0.002},
    {"ise", "mise5", 2, Contamination::C0, 5, Method::MM, 0.002},
    {"ise", "mise5", 2, Contamination::C0, 6, Method::LS, 0.002},
    {"ise", "mise5", 2, Contamination::C0, 6, Method::MM, 0.002},
    {"ise", "medise", 2, Contamination::C0, 1, Method::LS, 0.001},
    {"ise", "medise", 2, Contamination::C0, 1, Method::MM, 0.002},
    {"ise", "medise", 2, Contamination::C0, 2, Method::LS, 0.002},
    {"ise", "medise", 2, Contamination::C0, 2, Method::MM, 0.002},
    {"ise", "medise", 2, Contamination::C0, 3, Method::LS, 0.003},
    {"ise", "medise", 2, Contamination::C0, 3, Method::MM, 0.004},
    {"ise", "medise", 2, Contamination::C0, 4, Method::LS, 0.001},
    {"ise", "medise", 2, Contamination::C0, 4, Method::MM, 0.002},
    {"ise", "medise", 2, Contamination::C0, 5, Method::LS, 0.001},
    {"ise", "medise", 2, Contamination::C0, 5, Method::MM, 0.002},
    {"ise", "medise", 2, Contamination::C0, 6, Method::LS, 0.002},
    {"ise", "medise", 2, Contamination::C0, 6, Method::MM, 0.002},
    {"ise", "mise5", 2, Contamination::C1, 1, Method::LS, 0.018},
    {"ise", "mise5", 2, Contamination::C1, 1, Method::MM, 0.003},
    {"ise", "mise5", 2, Contamination::C1, 2, Method::LS, 0.019},
    {"ise", "mise5", 2, Contamination::C1, 2, Method::MM, 0.003},
    {"ise", "mise5", 2, Contamination::C1, 3, Method::LS, 0.051},
    {"ise", "mise5", 2, Contamination::C1, 3, Method::MM, 0.006},
    {"ise", "mise5", 2, Contamination::C1, 4, Method::LS, 0.018},
    {"ise", "mise5", 2, Contamination::C1, 4, Method::MM, 0.003},
    {"ise", "mise5", 2, Contamination::C1, 5, Method::LS, 0.018},
    {"ise", "mise5", 2, Contamination::C1, 5, Method::MM, 0.003},
    {"ise", "mise5", 2, Contamination::C1, 6, Method::LS, 0.017},
    {"ise", "mise5", 2, Contamination::C1, 6, Method::MM, 0.003},
    {"ise", "medise", 2, Contamination::C1, 1, Method::LS, 0.012},
    {"ise", "medise", 2, Contamination::C1, 1, Method::MM, 0.002},
    {"ise", "medise", 2, Contamination::C1, 2, Method::LS, 0.013},
    {"ise", "medise", 2, Contamination::C1, 2, Method::MM, 0.002},
    {"ise", "medise", 2, Contamination::C1, 3, Method::LS, 0.035},
    {"ise", "medise", 2, Contamination::C1, 3, Method::MM, 0.005},
    {"ise", "medise", 2, Contamination::C1, 4, Method::LS, 0.013},
    {"ise", "medise", 2, Contamination::C1, 4, Method::MM, 0.002},
    {"ise", "medise", 2, Contamination::C1, 5, Method::LS, 0.012},
    {"ise", "medise", 2, Contamination::C1, 5, Method::MM, 0.002},
    {"ise", "medise", 2, Contamination::C1, 6, Method::LS, 0.012},
    {"ise", "medise", 2, Contamination::C1, 6, Method::MM, 0.002},
    {"ise", "mise5", 2, Contamination::C2, 1, Method::LS, 1.282},
    {"ise", "mise5", 2, Contamination::C2, 1, Method::MM, 0.002},
    {"ise", "mise5", 2, Contamination::C2, 2, Method::LS, 1.256},
    {"ise", "mise5", 2, Contamination::C2, 2, Method::MM, 0.002},
    {"ise", "mise5", 2, Contamination::C2, 3, Method::LS, 3.47},
    {"ise", "mise5", 2, Contamination::C2, 3, Method::MM, 0.006},
    {"ise", "mise5", 2, Contamination::C2, 4, Method::LS, 1.244},
    {"ise", "mise5", 2, Contamination::C2, 4, Method::MM, 0.002},
    {"ise", "mise5", 2, Contamination::C2, 5, Method::LS, 1.231},
    {"ise", "mise5", 2, Contamination::C2, 5, Method::MM, 0.002},
    {"ise", "mise5", 2, Contamination::C2, 6, Method::LS, 1.271},
    {"ise", "mise5", 2, Contamination::C2, 6, Method::MM, 0.002},
    {"ise", "medise", 2, Contamination::C2, 1, Method::LS, 1.008},
    {"ise", "medise", 2, Contamination::C2, 1, Method::MM, 0.002},
    {"ise", "medise", 2, Contamination::C2, 2, Method::LS, 0.949},
    {"ise", "medise", 2, Contamination::C2, 2, Method::MM, 0.002},
    {"ise", "medise", 2, Contamination::C2, 3, Method::LS, 2.713},
    {"ise", "medise", 2, Contamination::C2, 3, Method::MM, 0.004},
    {"ise", "medise", 2, Contamination::C2, 4, Method::LS, 1.001},
    {"ise", "medise", 2, Contamination::C2, 4, Method::MM, 0.002},
    {"ise", "medise", 2, Contamination::C2, 5, Method::LS, 0.983},
    {"ise", "medise", 2, Contamination::C2, 5, Method::MM, 0.002},
    {"ise", "medise", 2, Contamination::C2, 6, Method::LS, 1.0},
    {"ise", "medise", 2, Contamination::C2, 6, Method::MM, 0.002},
    {"ise", "mise5", 2, Contamination::C3, 1, Method::LS, 0.063},
    {"ise", "mise5", 2, Contamination::C3, 1, Method::MM, 0.002},
    {"ise", "mise5", 2, Contamination::C3, 2, Method::LS, 0.046},
    {"ise", "mise5", 2, Contamination::C3, 2, Method::MM, 0.002},
    {"ise", "mise5", 2, Contamination::C3, 3, Method::LS, 0.793},
    {"ise", "mise5", 2, Contamination::C3, 3, Method::MM, 0.006},
    {"ise", "mise5", 2, Contamination::C3, 4, Method::LS, 0.038},
    {"ise", "mise5", 2, Contamination::C3, 4, Method::MM, 0.002},
    {"ise", "mise5", 2, Contamination::C3, 5, Method::LS, 0.009},
    {"ise", "mise5", 2, Contamination::C3, 5, Method::MM, 0.002},
    {"ise", "mise5", 2, Contamination::C3, 6, Method::LS, 0.047},
    {"ise", "mise5", 2, Contamination::C3, 6, Method::MM, 0.002},
    {"ise", "medise", 2, Contamination::C3, 1, Method::LS, 0.051},
    {"ise", "medise", 2, Contamination::C3, 1, Method::MM, 0.002},
    {"ise", "medise", 2, Contamination::C3, 2, Method::LS, 0.037},
    {"ise", "medise", 2, Contamination::C3, 2, Method::MM, 0.002},
    {"ise", "medise", 2, Contamination::C3, 3, Method::LS, 0.802},
    {"ise", "medise", 2, Contamination::C3, 3, Method::MM, 0.004},
    {"ise", "medise", 2, Contamination::C3, 4, Method::LS, 0.031},
    {"ise", "medise", 2, Contamination::C3, 4, Method::MM, 0.002},
    {"ise", "medise", 2, Contamination::C3, 5, Method::LS, 0.007},
    {"ise", "medise", 2, Contamination::C3, 5, Method::MM, 0.002},
    {"ise", "medise", 2, Contamination::C3, 6, Method::LS, 0.039},
    {"ise", "medise", 2, Contamination::C3, 6, Method::MM, 0.002},
    {"ise_trim", "mise_trim", 1, Contamination::C0, 1, Method::LS, 0.002},
    {"ise_trim", "mise_trim", 1, Contamination::C0, 1, Method::MM, 0.007},
    {"ise_trim", "mise_trim", 1, Contamination::C0, 2, Method::LS, 0.002},
    {"ise_trim", "mise_trim", 1, Contamination::C0, 2, Method::MM, 0.003},
    {"ise_trim", "mise_trim", 1, Contamination::C0, 3, Method::LS, 0.007},
    {"ise_trim", "mise_trim", 1, Contamination::C0, 3, Method::MM, 0.008},
    {"ise_trim", "mise_trim", 1, Contamination::C0, 4, Method::LS, 0.002},
    {"ise_trim", "mise_trim", 1, Contamination::C0, 4, Method::MM, 0.002},
    {"ise_trim", "mise_trim", 1, Contamination::C0, 5, Method::LS, 0.002},
    {"ise_trim", "mise_trim", 1, Contamination::C0, 5, Method::MM, 0.006},
    {"ise_trim", "mise_trim", 1, Contamination::C0, 6, Method::LS, 0.002},
    {"ise_trim", "mise_trim", 1, Contamination::C0, 6, Method::MM, 0.003},
    {"ise_trim", "medise_trim", 1, Contamination::C0, 1, Method::LS, 0.002},
    {"ise_trim", "medise_trim", 1, Contamination::C0, 1, Method::MM, 0.002},
    {"ise_trim", "medise_trim", 1, Contamination::C0, 2, Method::LS, 0.002},
    {"ise_trim", "medise_trim", 1, Contamination::C0, 2, Method::MM, 0.002},
    {"ise_trim", "medise_trim", 1, Contamination::C0, 3, Method::LS, 0.004},
    {"ise_trim", "medise_trim", 1, Contamination::C0, 3, Method::MM, 0.004},
    {"ise_trim", "medise_trim", 1, Contamination::C0, 4, Method::LS, 0.002},
    {"ise_trim", "medise_trim", 1, Contamination::C0, 4, Method::MM, 0.002},
    {"ise_trim", "medise_trim", 1, Contamination::C0, 5, Method::LS, 0.002},
    {"ise_trim", "medise_trim", 1, Contamination::C0, 5, Method::MM, 0.002},
    {"ise_trim", "medise_trim", 1, Contamination::C0, 6, Method::LS, 0.002},
    {"ise_trim", "medise_trim", 1, Contamination::C0, 6, Method::MM, 0.002},
    {"ise_trim", "mise_trim", 1, Contamination::C1, 1, Method::LS, 0.019},
    {"ise_trim", "mise_trim", 1, Contamination::C1, 1, Method::MM, 0.003},
    {"ise_trim", "mise_trim", 1, Contamination::C1, 2, Method::LS, 0.023},
    {"ise_trim", "mise_trim", 1, Contamination::C1, 2, Method::MM, 0.003},
    {"ise_trim", "mise_trim", 1, Contamination::C1, 3, Method::LS, 0.082},
    {"ise_trim", "mise_trim", 1, Contamination::C1, 3, Method::MM, 0.009},
    {"ise_trim", "mise_trim", 1, Contamination::C1, 4, Method::LS, 0.019},
    {"ise_trim", "mise_trim", 1, Contamination::C1, 4, Method::MM, 0.003},
    {"ise_trim", "mise_trim", 1, Contamination::C1, 5, Method::LS, 0.018},
    {"ise_trim", "mise_trim", 1, Contamination::C1, 5, Method::MM, 0.003},
    {"ise_trim", "mise_trim", 1, Contamination::C1, 6, Method::LS, 0.022},
    {"ise_trim", "mise_trim", 1, Contamination::C1, 6, Method::MM, 0.003},
    {"ise_trim", "medise_trim", 1, Contamination::C1, 1, Method::LS, 0.01},
    {"ise_trim", "medise_trim", 1, Contamination::C1, 1, Method::MM, 0.002},
    {"ise_trim", "medise_trim", 1, Contamination::C1, 2, Method::LS, 0.013},
    {"ise_trim", "medise_trim", 1, Contamination::C1, 2, Method::MM, 0.002},
    {"ise_trim", "medise_trim", 1, Contamination::C1, 3, Method::LS, 0.043},
    {"ise_trim", "medise_trim", 1, Contamination::C1, 3, Method::MM, 0.005},
    {"ise_trim", "medise_trim", 1, Contamination::C1, 4, Method::LS, 0.01},
    {"ise_trim", "medise_trim", 1, Contamination::C1, 4, Method::MM, 0.002},
    {"ise_trim", "medise_trim", 1, Contamination::C1, 5, Method::LS, 0.01},
    {"ise_trim", "medise_trim", 1, Contamination::C1, 5, Method::MM, 0.002},
    {"ise_trim", "medise_trim", 1, Contamination::C1, 6, Method::LS, 0.013},
    {"ise_trim", "medise_trim", 1, Contamination::C1, 6, Method::MM, 0.002},
    {"ise_trim", "mise_trim", 1, Contamination::C2, 1, Method::LS, 1.104},
    {"ise_trim", "mise_trim", 1, Contamination::C2, 1, Method::MM, 0.002},
    {"ise_trim", "mise_trim", 1, Contamination::C2, 2, Method::LS, 1.335},
    {"ise_trim", "mise_trim", 1, Contamination::C2, 2, Method::MM, 0.003},
    {"ise_trim", "mise_trim", 1, Contamination::C2, 3, Method::LS, 4.845},
    {"ise_trim", "mise_trim", 1, Contamination::C2, 3, Method::MM, 0.008},
    {"ise_trim", "mise_trim", 1, Contamination::C2, 4, Method::LS, 1.052},
    {"ise_trim", "mise_trim", 1, Contamination::C2, 4, Method::MM, 0.002},
    {"ise_trim", "mise_trim", 1, Contamination::C2, 5, Method::LS, 1.063},
    {"ise_trim", "mise_trim", 1, Contamination::C2, 5, Method::MM, 0.002},
    {"ise_trim", "mise_trim", 1, Contamination::C2, 6, Method::LS, 1.351},
    {"ise_trim", "mise_trim", 1, Contamination::C2, 6, Method::MM, 0.003},
    {"ise_trim", "medise_trim", 1, Contamination::C2, 1, Method::LS, 0.612},
    {"ise_trim", "medise_trim", 1, Contamination::C2, 1, Method::MM, 0.002},
    {"ise_trim", "medise_trim", 1, Contamination::C2, 2, Method::LS, 0.847},
    {"ise_trim", "medise_trim", 1, Contamination::C2, 2, Method::MM, 0.002},
    {"ise_trim", "medise_trim", 1, Contamination::C2, 3, Method::LS, 2.761},
    {"ise_trim", "medise_trim", 1, Contamination::C2, 3, Method::MM, 0.005},
    {"ise_trim", "medise_trim", 1, Contamination::C2, 4, Method::LS, 0.583},
    {"ise_trim", "medise_trim", 1, Contamination::C2, 4, Method::MM, 0.002},
    {"ise_trim", "medise_trim", 1, Contamination::C2, 5, Method::LS, 0.58},
    {"ise_trim", "medise_trim", 1, Contamination::C2, 5, Method::MM, 0.002},
    {"ise_trim", "medise_trim", 1, Contamination::C2, 6, Method::LS, 0.819},
    {"ise_trim", "medise_trim", 1, Contamination::C2, 6, Method::MM, 0.002},
    {"ise_trim", "mise_trim", 1, Contamination::C3, 1, Method::LS, 0.057},
    {"ise_trim", "mise_trim", 1, Contamination::C3, 1, Method::MM, 0.002},
    {"ise_trim", "mise_trim", 1, Contamination::C3, 2, Method::LS, 0.505},
    {"ise_trim", "mise_trim", 1, Contamination::C3, 2, Method::MM, 0.003},
    {"ise_trim", "mise_trim", 1, Contamination::C3, 3, Method::LS, 2.068},
    {"ise_trim", "mise_trim", 1, Contamination::C3, 3, Method::MM, 0.009},
    {"ise_trim", "mise_trim", 1, Contamination::C3, 4, Method::LS, 0.035},
    {"ise_trim", "mise_trim", 1, Contamination::C3, 4, Method::MM, 0.002},
    {"ise_trim", "mise_trim", 1, Contamination::C3, 5, Method::LS, 0.008},
    {"ise_trim", "mise_trim", 1, Contamination::C3, 5, Method::MM, 0.002},
    {"ise_trim", "mise_trim", 1, Contamination::C3, 6, Method::LS, 0.269},
    {"ise_trim", "mise_trim", 1, Contamination::C3, 6, Method::MM, 0.003},
    {"ise_trim", "medise_trim", 1, Contamination::C3, 1, Method::LS, 0.037},
    {"ise_trim", "medise_trim", 1, Contamination::C3, 1, Method::MM, 0.002},
    {"ise_trim", "medise_trim", 1, Contamination::C3, 2, Method::LS, 0.489},
    {"ise_trim", "medise_trim", 1, Contamination::C3, 2, Method::MM, 0.002},
    {"ise_trim", "medise_trim", 1, Contamination::C3, 3, Method::LS, 2.058},
    {"ise_trim", "medise_trim", 1, Contamination::C3, 3, Method::MM, 0.005},
    {"ise_trim", "medise_trim", 1, Contamination::C3, 4, Method::LS, 0.021},
    {"ise_trim", "medise_trim", 1, Contamination::C3, 4, Method::MM, 0.002},
    {"ise_trim", "medise_trim", 1, Contamination::C3, 5, Method::LS, 0.005},
    {"ise_trim", "medise_trim", 1, Contamination::C3, 5, Method::MM, 0.002},
    {"ise_trim", "medise_trim", 1, Contamination::C3, 6, Method::LS, 0.252},
    {"ise_trim", "medise_trim", 1, Contamination::C3, 6, Method::MM, 0.002},
    {"ise_trim", "mise_trim", 2, Contamination::C0, 1, Method::LS, 0.002},
    {"ise_trim", "mise_trim", 2, Contamination::C0, 1, Method::MM, 0.011},
    {"ise_trim", "mise_trim", 2, Contamination::C0, 2, Method::LS, 0.002},
    {"ise_trim", "mise_trim", 2, Contamination::C0, 2, Method::MM, 0.002},
    {"ise_trim", "mise_trim", 2, Contamination::C0, 3, Method::LS, 0.005},
    {"ise_trim", "mise_trim", 2, Contamination::C0, 3, Method::MM, 0.006},
    {"ise_trim", "mise_trim", 2, Contamination::C0, 4, Method::LS, 0.002},
    {"ise_trim", "mise_trim", 2, Contamination::C0, 4, Method::MM, 0.002},
    {"ise_trim", "mise_trim", 2, Contamination::C0, 5, Method::LS, 0.002},
    {"ise_trim", "mise_trim", 2, Contamination::C0, 5, Method::MM, 0.002},
    {"ise_trim", "mise_trim", 2, Contamination::C0, 6, Method::LS, 0.002},
    {"ise_trim", "mise_trim", 2, Contamination::C0, 6, Method::MM, 0.002},
    {"ise_trim", "medise_trim", 2, Contamination::C0, 1, Method::LS, 0.001},
    {"ise_trim", "medise_trim", 2, Contamination::C0, 1, Method::MM, 0.001},
    {"ise_trim", "medise_trim", 2, Contamination::C0, 2, Method::LS, 0.001},
    {"ise_trim", "medise_trim", 2, Contamination::C0, 2, Method::MM, 0.002},
    {"ise_trim", "medise_trim", 2, Contamination::C0, 3, Method::LS, 0.003},
    {"ise_trim", "medise_trim", 2, Contamination::C0, 3, Method::MM, 0.001},
    {"ise_trim", "medise_trim", 2, Contamination::C0, 4, Method::LS, 0.001},
    {"ise_trim", "medise_trim", 2, Contamination::C0, 4, Method::MM, 0.001},
    {"ise_trim", "medise_trim", 2, Contamination::C0, 5, Method::LS, 0.001},
    {"ise_trim", "medise_trim", 2, Contamination::C0, 5, Method::MM, 0.001},
    {"ise_trim", "medise_trim", 2, Contamination::C0, 6, Method::LS, 0.001},
    {"ise_trim", "medise_trim", 2, Contamination::C0, 6, Method::MM, 0.001},
    {"ise_trim", "mise_trim", 2, Contamination::C1, 1, Method::LS, 0.018},
    {"ise_trim", "mise_trim", 2, Contamination::C1, 1, Method::MM, 0.002},
    {"ise_trim", "mise_trim", 2, Contamination::C1, 2, Method::LS, 0.018},
    {"ise_trim", "mise_trim", 2, Contamination::C1, 2, Method::MM, 0.003},
    {"ise_trim", "mise_trim", 2, Contamination::C1, 3, Method::LS, 0.05},
    {"ise_trim", "mise_trim", 2, Contamination::C1, 3, Method::MM, 0.006},
    {"ise_trim", "mise_trim", 2, Contamination::C1, 4, Method::LS, 0.018},
    {"ise_trim", "mise_trim", 2, Contamination::C1, 4, Method::MM, 0.004},
    {"ise_trim", "mise_trim", 2, Contamination::C1, 5, Method::LS, 0.017},
    {"ise_trim", "mise_trim", 2, Contamination::C1, 5, Method::MM, 0.002},
    {"ise_trim", "mise_trim", 2, Contamination::C1, 6, Method::LS, 0.017},
    {"ise_trim", "mise_trim", 2, Contamination::C1, 6, Method::MM, 0.003},
    {"ise_trim", "medise_trim", 2, Contamination::C1, 1, Method::LS, 0.009},
    {"ise_trim", "medise_trim", 2, Contamination::C1, 1, Method::MM, 0.002},
    {"ise_trim", "medise_trim", 2, Contamination::C1, 2, Method::LS, 0.01},
    {"ise_trim", "medise_trim", 2, Contamination::C1, 2, Method::MM, 0.001},
    {"ise_trim", "medise_trim", 2, Contamination::C1, 3, Method::LS, 0.026},
    {"ise_trim", "medise_trim", 2, Contamination::C1, 3, Method::MM, 0.004},
    {"ise_trim", "medise_trim", 2, Contamination::C1, 4, Method::LS, 0.01},
    {"ise_trim", "medise_trim", 2, Contamination::C1, 4, Method::MM, 0.002},
    {"ise_trim", "medise_trim", 2, Contamination::C1, 5, Method::LS, 0.009},
    {"ise_trim", "medise_trim", 2, Contamination::C1, 5, Method::MM, 0.001},
    {"ise_trim", "medise_trim", 2, Contamination::C1, 6, Method::LS, 0.008},
    {"ise_trim", "medise_trim", 2, Contamination::C1, 6, Method::MM, 0.002},
    {"ise_trim", "mise_trim", 2, Contamination::C2, 1, Method::LS, 1.182},
    {"ise_trim", "mise_trim", 2, Contamination::C2, 1, Method::MM, 0.041},
    {"ise_trim", "mise_trim", 2, Contamination::C2, 2, Method::LS, 1.219},
    {"ise_trim", "mise_trim", 2, Contamination::C2, 2, Method::MM, 0.002},
    {"ise_trim", "mise_trim", 2, Contamination::C2, 3, Method::LS, 3.357},
    {"ise_trim", "mise_trim", 2, Contamination::C2, 3, Method::MM, 0.005},
    {"ise_trim", "mise_trim", 2, Contamination::C2, 4, Method::LS, 1.148},
    {"ise_trim", "mise_trim", 2, Contamination::C2, 4, Method::MM, 0.002},
    {"ise_trim", "mise_trim", 2, Contamination::C2, 5, Method::LS, 1.134},
    {"ise_trim", "mise_trim", 2, Contamination::C2, 5, Method::MM, 0.007},
    {"ise_trim", "mise_trim", 2, Contamination::C2, 6, Method::LS, 1.206},
    {"ise_trim", "mise_trim", 2, Contamination::C2, 6, Method::MM, 0.002},
    {"ise_trim", "medise_trim", 2, Contamination::C2, 1, Method::LS, 0.707},
    {"ise_trim", "medise_trim", 2, Contamination::C2, 1, Method::MM, 0.001},
    {"ise_trim", "medise_trim", 2, Contamination::C2, 2, Method::LS, 0.679},
    {"ise_trim", "medise_trim", 2, Contamination::C2, 2, Method::MM, 0.001},
    {"ise_trim", "medise_trim", 2, Contamination::C2, 3, Method::LS, 2.075},
    {"ise_trim", "medise_trim", 2, Contamination::C2, 3, Method::MM, 0.003},
    {"ise_trim", "medise_trim", 2, Contamination::C2, 4, Method::LS, 0.679},
    {"ise_trim", "medise_trim", 2, Contamination::C2, 4, Method::MM, 0.001},
    {"ise_trim", "medise_trim", 2, Contamination::C2, 5, Method::LS, 0.704},
    {"ise_trim", "medise_trim", 2, Contamination::C2, 5, Method::MM, 0.001},
    {"ise_trim", "medise_trim", 2, Contamination::C2, 6, Method::LS, 0.708},
    {"ise_trim", "medise_trim", 2, Contamination::C2, 6, Method::MM, 0.001},
    {"ise_trim", "mise_trim", 2, Contamination::C3, 1, Method::LS, 0.058},
    {"ise_trim", "mise_trim", 2, Contamination::C3, 1, Method::MM, 0.068},
    {"ise_trim", "mise_trim", 2, Contamination::C3, 2, Method::LS, 0.043},
    {"ise_trim", "mise_trim", 2, Contamination::C3, 2, Method::MM, 0.002},
    {"ise_trim", "mise_trim", 2, Contamination::C3, 3, Method::LS, 0.651},
    {"ise_trim", "mise_trim", 2, Contamination::C3, 3, Method::MM, 0.006},
    {"ise_trim", "mise_trim", 2, Contamination::C3, 4, Method::LS, 0.036},
    {"ise_trim", "mise_trim", 2, Contamination::C3, 4, Method::MM, 0.002},
    {"ise_trim", "mise_trim", 2, Contamination::C3, 5, Method::LS, 0.008},
    {"ise_trim", "mise_trim", 2, Contamination::C3, 5, Method::MM, 0.002},
    {"ise_trim", "mise_trim", 2, Contamination::C3, 6, Method::LS, 0.042},
    {"ise_trim", "mise_trim", 2, Contamination::C3, 6, Method::MM, 0.002},
    {"ise_trim", "medise_trim", 2, Contamination::C3, 1, Method::LS, 0.034},
    {"ise_trim", "medise_trim", 2, Contamination::C3, 1, Method::MM, 0.001},
    {"ise_trim", "medise_trim", 2, Contamination::C3, 2, Method::LS, 0.026},
    {"ise_trim", "medise_trim", 2, Contamination::C3, 2, Method::MM, 0.001},
    {"ise_trim", "medise_trim", 2, Contamination::C3, 3, Method::LS, 0.645},
    {"ise_trim", "medise_trim", 2, Contamination::C3, 3, Method::MM, 0.004},
    {"ise_trim", "medise_trim", 2, Contamination::C3, 4, Method::LS, 0.021},
    {"ise_trim", "medise_trim", 2, Contamination::C3, 4, Method::MM, 0.001},
    {"ise_trim", "medise_trim", 2, Contamination::C3, 5, Method::LS, 0.005},
    {"ise_trim", "medise_trim", 2, Contamination::C3, 5, Method::MM, 0.001},
    {"ise_trim", "medise_trim", 2, Contamination::C3, 6, Method::LS, 0.03},
    {"ise_trim", "medise_trim", 2, Contamination::C3, 6, Method::MM, 0.001},
    {"beta1", "bias", 1, Contamination::C0, 1, Method::LS, 0.0},
    {"beta1", "bias", 1, Contamination::C0, 1, Method::MM, -0.002},
    {"beta1", "bias", 1, Contamination::C0, 2, Method::LS, 0.0},
    {"beta1", "bias", 1, Contamination::C0, 2, Method::MM, 0.002},
    {"beta1", "bias", 1, Contamination::C0, 3, Method::LS, -0.018},
    {"beta1", "bias", 1, Contamination::C0, 3, Method::MM, -0.016},
    {"beta1", "bias", 1, Contamination::C0, 4, Method::LS, 0.0},
    {"beta1", "bias", 1, Contamination::C0, 4, Method::MM, -0.001},
    {"beta1", "bias", 1, Contamination::C0, 5, Method::LS, -0.007},
    {"beta1", "bias", 1, Contamination::C0, 5, Method::MM, -0.002},
    {"beta1", "bias", 1, Contamination::C0, 6, Method::LS, 0.002},
    {"beta1", "bias", 1, Contamination::C0, 6, Method::MM, 0.001},
    {"beta1", "sd", 1, Contamination::C0, 1, Method::LS, 0.075},
    {"beta1", "sd", 1, Contamination::C0, 1, Method::MM, 0.079},
    {"beta1", "sd", 1, Contamination::C0, 2, Method::LS, 0.098},
    {"beta1", "sd", 1, Contamination::C0, 2, Method::MM, 0.106},
    {"beta1", "sd", 1, Contamination::C0, 3, Method::LS, 0.201},
    {"beta1", "sd", 1, Contamination::C0, 3, Method::MM, 0.214},
    {"beta1", "sd", 1, Contamination::C0, 4, Method::LS, 0.074},
    {"beta1", "sd", 1, Contamination::C0, 4, Method::MM, 0.078},
    {"beta1", "sd", 1, Contamination::C0, 5, Method::LS, 0.199},
    {"beta1", "sd", 1, Contamination::C0, 5, Method::MM, 0.209},
    {"beta1", "sd", 1, Contamination::C0, 6, Method::LS, 0.109},
    {"beta1", "sd", 1, Contamination::C0, 6, Method::MM, 0.113},
    {"beta1", "mse", 1, Contamination::C0, 1, Method::LS, 0.006},
    {"beta1", "mse", 1, Contamination::C0, 1, Method::MM, 0.006},
    {"beta1", "mse", 1, Contamination::C0, 2, Method::LS, 0.01},
    {"beta1", "mse", 1, Contamination::C0, 2, Method::MM, 0.011},
    {"beta1", "mse", 1, Contamination::C0, 3, Method::LS, 0.04},
    {"beta1", "mse", 1, Contamination::C0, 3, Method::MM, 0.046},
    {"beta1", "mse", 1, Contamination::C0, 4, Method::LS, 0.005},
    {"beta1", "mse", 1, Contamination::C0, 4, Method::MM, 0.006},
    {"beta1", "mse", 1, Contamination::C0, 5, Method::LS, 0.04},
    {"beta1", "mse", 1, Contamination::C0, 5, Method::MM, 0.044},
    {"beta1", "mse", 1, Contamination::C0, 6, Method::LS, 0.012},
    {"beta1", "mse", 1, Contamination::C0, 6, Method::MM, 0.013},
    {"beta1", "bias", 1, Contamination::C1, 1, Method::LS, -0.01},
    {"beta1", "bias", 1, Contamination::C1, 1, Method::MM, -0.004},
    {"beta1", "bias", 1, Contamination::C1, 2, Method::LS, -0.006},
    {"beta1", "bias", 1, Contamination::C1, 2, Method::MM, 0.003},
    {"beta1", "bias", 1, Contamination::C1, 3, Method::LS, -0.01},
    {"beta1", "bias", 1, Contamination::C1, 3, Method::MM, -0.02},
    {"beta1", "bias", 1, Contamination::C1, 4, Method::LS, -0.011},
    {"beta1", "bias", 1, Contamination::C1, 4, Method::MM, -0.004},
    {"beta1", "bias", 1, Contamination::C1, 5, Method::LS, -0.06},
    {"beta1", "bias", 1, Contamination::C1, 5, Method::MM, -0.003},
    {"beta1", "bias", 1, Contamination::C1, 6, Method::LS, -0.013},
    {"beta1", "bias", 1, Contamination::C1, 6, Method::MM, 0.001},
    {"beta1", "sd", 1, Contamination::C1, 1, Method::LS, 0.245},
    {"beta1", "sd", 1, Contamination::C1, 1, Method::MM, 0.086},
    {"beta1", "sd", 1, Contamination::C1, 2, Method::LS, 0.334},
    {"beta1", "sd", 1, Contamination::C1, 2, Method::MM, 0.113},
    {"beta1", "sd", 1, Contamination::C1, 3, Method::LS, 0.679},
    {"beta1", "sd", 1, Contamination::C1, 3, Method::MM, 0.226},
    {"beta1", "sd", 1, Contamination::C1, 4, Method::LS, 0.251},
    {"beta1", "sd", 1, Contamination::C1, 4, Method::MM, 0.087},
    {"beta1", "sd", 1, Contamination::C1, 5, Method::LS, 0.623},
    {"beta1", "sd", 1, Contamination::C1, 5, Method::MM, 0.226},
    {"beta1", "sd", 1, Contamination::C1, 6, Method::LS, 0.386},
    {"beta1", "sd", 1, Contamination::C1, 6, Method::MM, 0.123},
    {"beta1", "mse", 1, Contamination::C1, 1, Method::LS, 0.06},
    {"beta1", "mse", 1, Contamination::C1, 1, Method::MM, 0.007},
    {"beta1", "mse", 1, Contamination::C1, 2, Method::LS, 0.111},
    {"beta1", "mse", 1, Contamination::C1, 2, Method::MM, 0.013},
    {"beta1", "mse", 1, Contamination::C1, 3, Method::LS, 0.461},
    {"beta1", "mse", 1, Contamination::C1, 3, Method::MM, 0.051},
    {"beta1", "mse", 1, Contamination::C1, 4, Method::LS, 0.063},
    {"beta1", "mse", 1, Contamination::C1, 4, Method::MM, 0.008},
    {"beta1", "mse", 1, Contamination::C1, 5, Method::LS, 0.391},
    {"beta1", "mse", 1, Contamination::C1, 5, Method::MM, 0.051},
    {"beta1", "mse", 1, Contamination::C1, 6, Method::LS, 0.149},
    {"beta1", "mse", 1, Contamination::C1, 6, Method::MM, 0.015},
    {"beta1", "bias", 1, Contamination::C2, 1, Method::LS, -0.087},
    {"beta1", "bias", 1, Contamination::C2, 1, Method::MM, -0.002},
    {"beta1", "bias", 1, Contamination::C2, 2, Method::LS, 0.068},
    {"beta1", "bias", 1, Contamination::C2, 2, Method::MM, 0.006},
    {"beta1", "bias", 1, Contamination::C2, 3, Method::LS, 0.009},
    {"beta1", "bias", 1, Contamination::C2, 3, Method::MM, -0.021},
    {"beta1", "bias", 1, Contamination::C2, 4, Method::LS, -0.08},
    {"beta1", "bias", 1, Contamination::C2, 4, Method::MM, -0.001},
    {"beta1", "bias", 1, Contamination::C2, 5, Method::LS, -0.269},
    {"beta1", "bias", 1, Contamination::C2, 5, Method::MM, 0.003},
    {"beta1", "bias", 1, Contamination::C2, 6, Method::LS, 0.049},
    {"beta1", "bias", 1, Contamination::C2, 6, Method::MM, 0.001},
    {"beta1", "sd", 1, Contamination::C2, 1, Method::LS, 1.879},
    {"beta1", "sd", 1, Contamination::C2, 1, Method::MM, 0.085},
    {"beta1", "sd", 1, Contamination::C2, 2, Method::LS, 2.811},
    {"beta1", "sd", 1, Contamination::C2, 2, Method::MM, 0.111},
    {"beta1", "sd", 1, Contamination::C2, 3, Method::LS, 5.618},
    {"beta1", "sd", 1, Contamination::C2, 3, Method::MM, 0.223},
    {"beta1", "sd", 1, Contamination::C2, 4, Method::LS, 1.869},
    {"beta1", "sd", 1, Contamination::C2, 4, Method::MM, 0.084},
    {"beta1", "sd", 1, Contamination::C2, 5, Method::LS, 5.113},
    {"beta1", "sd", 1, Contamination::C2, 5, Method::MM, 0.223},
    {"beta1", "sd", 1, Contamination::C2, 6, Method::LS, 2.951},
    {"beta1", "sd", 1, Contamination::C2, 6, Method::MM, 0.118},
    {"beta1", "mse", 1, Contamination::C2, 1, Method::LS, 3.53},
    {"beta1", "mse", 1, Contamination::C2, 1, Method::MM, 0.007},
    {"beta1", "mse", 1, Contamination::C2, 2, Method::LS, 7.888},
    {"beta1", "mse", 1, Contamination::C2, 2, Method::MM, 0.012},
    {"beta1", "mse", 1, Contamination::C2, 3, Method::LS, 31.495},
    {"beta1", "mse", 1, Contamination::C2, 3, Method::MM, 0.05},
    {"beta1", "mse", 1, Contamination::C2, 4, Method::LS, 3.491},
    {"beta1", "mse", 1, Contamination::C2, 4, Method::MM, 0.007},
    {"beta1", "mse", 1, Contamination::C2, 5, Method::LS, 26.168},
    {"beta1", "mse", 1, Contamination::C2, 5, Method::MM, 0.05},
    {"beta1", "mse", 1, Contamination::C2, 6, Method::LS, 8.693},
    {"beta1", "mse", 1, Contamination::C2, 6, Method::MM, 0.014},
    {"beta1", "bias", 1, Contamination::C3, 1, Method::LS, -2.989},
    {"beta1", "bias", 1, Contamination::C3, 1, Method::MM, -0.002},
    {"beta1", "bias", 1, Contamination::C3, 2, Method::LS, -3.963},
    {"beta1", "bias", 1, Contamination::C3, 2, Method::MM, 0.004},
    {"beta1", "bias", 1, Contamination::C3, 3, Method::LS, -2.975},
    {"beta1", "bias", 1, Contamination::C3, 3, Method::MM, -0.01},
    {"beta1", "bias", 1, Contamination::C3, 4, Method::LS, -1.629},
    {"beta1", "bias", 1, Contamination::C3, 4, Method::MM, -0.002},
    {"beta1", "bias", 1, Contamination::C3, 5, Method::LS, -3.287},
    {"beta1", "bias", 1, Contamination::C3, 5, Method::MM, -0.005},
    {"beta1", "bias", 1, Contamination::C3, 6, Method::LS, -3.884},
    {"beta1", "bias", 1, Contamination::C3, 6, Method::MM, 0.001},
    {"beta1", "sd", 1, Contamination::C3, 1, Method::LS, 0.231},
    {"beta1", "sd", 1, Contamination::C3, 1, Method::MM, 0.082},
    {"beta1", "sd", 1, Contamination::C3, 2, Method::LS, 0.272},
    {"beta1", "sd", 1, Contamination::C3, 2, Method::MM, 0.111},
    {"beta1", "sd", 1, Contamination::C3, 3, Method::LS, 0.317},
    {"beta1", "sd", 1, Contamination::C3, 3, Method::MM, 0.224},
    {"beta1", "sd", 1, Contamination::C3, 4, Method::LS, 0.287},
    {"beta1", "sd", 1, Contamination::C3, 4, Method::MM, 0.08},
    {"beta1", "sd", 1, Contamination::C3, 5, Method::LS, 0.184},
    {"beta1", "sd", 1, Contamination::C3, 5, Method::MM, 0.218},
    {"beta1", "sd", 1, Contamination::C3, 6, Method::LS, 0.27},
    {"beta1", "sd", 1, Contamination::C3, 6, Method::MM, 0.119},
    {"beta1", "mse", 1, Contamination::C3, 1, Method::LS, 8.986},
    {"beta1", "mse", 1, Contamination::C3, 1, Method::MM, 0.007},
    {"beta1", "mse", 1, Contamination::C3, 2, Method::LS, 15.776},
    {"beta1", "mse", 1, Contamination::C3, 2, Method::MM, 0.012},
    {"beta1", "mse", 1, Contamination::C3, 3, Method::LS, 8.948},
    {"beta1", "mse", 1, Contamination::C3, 3, Method::MM, 0.05},
    {"beta1", "mse", 1, Contamination::C3, 4, Method::LS, 2.737},
    {"beta1", "mse", 1, Contamination::C3, 4, Method::MM, 0.006},
    {"beta1", "mse", 1, Contamination::C3, 5, Method::LS, 10.839},
    {"beta1", "mse", 1, Contamination::C3, 5, Method::MM, 0.048},
    {"beta1", "mse", 1, Contamination::C3, 6, Method::LS, 15.155},
    {"beta1", "mse", 1, Contamination::C3, 6, Method::MM, 0.014},
    {"beta2", "bias", 2, Contamination::C0, 1, Method::LS, 0.002},
    {"beta2", "bias", 2, Contamination::C0, 1, Method::MM, 0.001},
    {"beta2", "bias", 2, Contamination::C0, 2, Method::LS, 0.002},
    {"beta2", "bias", 2, Contamination::C0, 2, Method::MM, 0.001},
    {"beta2", "bias", 2, Contamination::C0, 3, Method::LS, 0.002},
    {"beta2", "bias", 2, Contamination::C0, 3, Method::MM, 0.003},
    {"beta2", "bias", 2, Contamination::C0, 4, Method::LS, 0.002},
    {"beta2", "bias", 2, Contamination::C0, 4, Method::MM, 0.001},
    {"beta2", "bias", 2, Contamination::C0, 5, Method::LS, -0.006},
    {"beta2", "bias", 2, Contamination::C0, 5, Method::MM, -0.002},
    {"beta2", "bias", 2, Contamination::C0, 6, Method::LS, 0.011},
    {"beta2", "bias", 2, Contamination::C0, 6, Method::MM, 0.007},
    {"beta2", "sd", 2, Contamination::C0, 1, Method::LS, 0.076},
    {"beta2", "sd", 2, Contamination::C0, 1, Method::MM, 0.081},
    {"beta2", "sd", 2, Contamination::C0, 2, Method::LS, 0.075},
    {"beta2", "sd", 2, Contamination::C0, 2, Method::MM, 0.078},
    {"beta2", "sd", 2, Contamination::C0, 3, Method::LS, 0.21},
    {"beta2", "sd", 2, Contamination::C0, 3, Method::MM, 0.215},
    {"beta2", "sd", 2, Contamination::C0, 4, Method::LS, 0.123},
    {"beta2", "sd", 2, Contamination::C0, 4, Method::MM, 0.128},
    {"beta2", "sd", 2, Contamination::C0, 5, Method::LS, 0.172},
    {"beta2", "sd", 2, Contamination::C0, 5, Method::MM, 0.179},
    {"beta2", "sd", 2, Contamination::C0, 6, Method::LS, 0.087},
    {"beta2", "sd", 2, Contamination::C0, 6, Method::MM, 0.091},
    {"beta2", "mse", 2, Contamination::C0, 1, Method::LS, 0.006},
    {"beta2", "mse", 2, Contamination::C0, 1, Method::MM, 0.007},
    {"beta2", "mse", 2, Contamination::C0, 2, Method::LS, 0.006},
    {"beta2", "mse", 2, Contamination::C0, 2, Method::MM, 0.006},
    {"beta2", "mse", 2, Contamination::C0, 3, Method::LS, 0.044},
    {"beta2", "mse", 2, Contamination::C0, 3, Method::MM, 0.046},
    {"beta2", "mse", 2, Contamination::C0, 4, Method::LS, 0.015},
    {"beta2", "mse", 2, Contamination::C0, 4, Method::MM, 0.016},
    {"beta2", "mse", 2, Contamination::C0, 5, Method::LS, 0.03},
    {"beta2", "mse", 2, Contamination::C0, 5, Method::MM, 0.032},
    {"beta2", "mse", 2, Contamination::C0, 6, Method::LS, 0.008},
    {"beta2", "mse", 2, Contamination::C0, 6, Method::MM, 0.008},
    {"beta2", "bias", 2, Contamination::C1, 1, Method::LS, -0.017},
    {"beta2", "bias", 2, Contamination::C1, 1, Method::MM, -0.001},
    {"beta2", "bias", 2, Contamination::C1, 2, Method::LS, -0.002},
    {"beta2", "bias", 2, Contamination::C1, 2, Method::MM, 0.002},
    {"beta2", "bias", 2, Contamination::C1, 3, Method::LS, 0.004},
    {"beta2", "bias", 2, Contamination::C1, 3, Method::MM, -0.002},
    {"beta2", "bias", 2, Contamination::C1, 4, Method::LS, -0.039},
    {"beta2", "bias", 2, Contamination::C1, 4, Method::MM, -0.005},
    {"beta2", "bias", 2, Contamination::C1, 5, Method::LS, -0.029},
    {"beta2", "bias", 2, Contamination::C1, 5, Method::MM, -0.004},
    {"beta2", "bias", 2, Contamination::C1, 6, Method::LS, 0.024},
    {"beta2", "bias", 2, Contamination::C1, 6, Method::MM, 0.012},
    {"beta2", "sd", 2, Contamination::C1, 1, Method::LS, 0.239},
    {"beta2", "sd", 2, Contamination::C1, 1, Method::MM, 0.088},
    {"beta2", "sd", 2, Contamination::C1, 2, Method::LS, 0.233},
    {"beta2", "sd", 2, Contamination::C1, 2, Method::MM, 0.086},
    {"beta2", "sd", 2, Contamination::C1, 3, Method::LS, 0.709},
    {"beta2", "sd", 2, Contamination::C1, 3, Method::MM, 0.236},
    {"beta2", "sd", 2, Contamination::C1, 4, Method::LS, 0.391},
    {"beta2", "sd", 2, Contamination::C1, 4, Method::MM, 0.143},
    {"beta2", "sd", 2, Contamination::C1, 5, Method::LS, 0.56},
    {"beta2", "sd", 2, Contamination::C1, 5, Method::MM, 0.196},
    {"beta2", "sd", 2, Contamination::C1, 6, Method::LS, 0.267},
    {"beta2", "sd", 2, Contamination::C1, 6, Method::MM, 0.101},
    {"beta2", "mse", 2, Contamination::C1, 1, Method::LS, 0.057},
    {"beta2", "mse", 2, Contamination::C1, 1, Method::MM, 0.008},
    {"beta2", "mse", 2, Contamination::C1, 2, Method::LS, 0.054},
    {"beta2", "mse", 2, Contamination::C1, 2, Method::MM, 0.007},
    {"beta2", "mse", 2, Contamination::C1, 3, Method::LS, 0.502},
    {"beta2", "mse", 2, Contamination::C1, 3, Method::MM, 0.056},
    {"beta2", "mse", 2, Contamination::C1, 4, Method::LS, 0.154},
    {"beta2", "mse", 2, Contamination::C1, 4, Method::MM, 0.02},
    {"beta2", "mse", 2, Contamination::C1, 5, Method::LS, 0.314},
    {"beta2", "mse", 2, Contamination::C1, 5, Method::MM, 0.038},
    {"beta2", "mse", 2, Contamination::C1, 6, Method::LS, 0.072},
    {"beta2", "mse", 2, Contamination::C1, 6, Method::MM, 0.01},
    {"beta2", "bias", 2, Contamination::C2, 1, Method::LS, -0.051},
    {"beta2", "bias", 2, Contamination::C2, 1, Method::MM, -0.001},
    {"beta2", "bias", 2, Contamination::C2, 2, Method::LS, -0.035},
    {"beta2", "bias", 2, Contamination::C2, 2, Method::MM, 0.001},
    {"beta2", "bias", 2, Contamination::C2, 3, Method::LS, -0.218},
    {"beta2", "bias", 2, Contamination::C2, 3, Method::MM, 0.003},
    {"beta2", "bias", 2, Contamination::C2, 4, Method::LS, -0.166},
    {"beta2", "bias", 2, Contamination::C2, 4, Method::MM, -0.002},
    {"beta2", "bias", 2, Contamination::C2, 5, Method::LS, -0.274},
    {"beta2", "bias", 2, Contamination::C2, 5, Method::MM, 0.004},
    {"beta2", "bias", 2, Contamination::C2, 6, Method::LS, -0.006},
    {"beta2", "bias", 2, Contamination::C2, 6, Method::MM, 0.012},
    {"beta2", "sd", 2, Contamination::C2, 1, Method::LS, 2.054},
    {"beta2", "sd", 2, Contamination::C2, 1, Method::MM, 0.085},
    {"beta2", "sd", 2, Contamination::C2, 2, Method::LS, 2.185},
    {"beta2", "sd", 2, Contamination::C2, 2, Method::MM, 0.082},
    {"beta2", "sd", 2, Contamination::C2, 3, Method::LS, 5.959},
    {"beta2", "sd", 2, Contamination::C2, 3, Method::MM, 0.227},
    {"beta2", "sd", 2, Contamination::C2, 4, Method::LS, 3.174},
    {"beta2", "sd", 2, Contamination::C2, 4, Method::MM, 0.137},
    {"beta2", "sd", 2, Contamination::C2, 5, Method::LS, 4.536},
    {"beta2", "sd", 2, Contamination::C2, 5, Method::MM, 0.195},
    {"beta2", "sd", 2, Contamination::C2, 6, Method::LS, 2.238},
    {"beta2", "sd", 2, Contamination::C2, 6, Method::MM, 0.097},
    {"beta2", "mse", 2, Contamination::C2, 1, Method::LS, 4.214},
    {"beta2", "mse", 2, Contamination::C2, 1, Method::MM, 0.007},
    {"beta2", "mse", 2, Contamination::C2, 2, Method::LS, 4.766},
    {"beta2", "mse", 2, Contamination::C2, 2, Method::MM, 0.007},
    {"beta2", "mse", 2, Contamination::C2, 3, Method::LS, 35.491},
    {"beta2", "mse", 2, Contamination::C2, 3, Method::MM, 0.052},
    {"beta2", "mse", 2, Contamination::C2, 4, Method::LS, 10.08},
    {"beta2", "mse", 2, Contamination::C2, 4, Method::MM, 0.019},
    {"beta2", "mse", 2, Contamination::C2, 5, Method::LS, 20.605},
    {"beta2", "mse", 2, Contamination::C2, 5, Method::MM, 0.038},
    {"beta2", "mse", 2, Contamination::C2, 6, Method::LS, 5.001},
    {"beta2", "mse", 2, Contamination::C2, 6, Method::MM, 0.01},
    {"beta2", "bias", 2, Contamination::C3, 1, Method::LS, -3.005},
    {"beta2", "bias", 2, Contamination::C3, 1, Method::MM, 0.001},
    {"beta2", "bias", 2, Contamination::C3, 2, Method::LS, -2.033},
    {"beta2", "bias", 2, Contamination::C3, 2, Method::MM, 0.003},
    {"beta2", "bias", 2, Contamination::C3, 3, Method::LS, -3.024},
    {"beta2", "bias", 2, Contamination::C3, 3, Method::MM, 0.002},
    {"beta2", "bias", 2, Contamination::C3, 4, Method::LS, -4.346},
    {"beta2", "bias", 2, Contamination::C3, 4, Method::MM, 0.001},
    {"beta2", "bias", 2, Contamination::C3, 5, Method::LS, -2.709},
    {"beta2", "bias", 2, Contamination::C3, 5, Method::MM, 0.001},
    {"beta2", "bias", 2, Contamination::C3, 6, Method::LS, -2.097},
    {"beta2", "bias", 2, Contamination::C3, 6, Method::MM, 0.01},
    {"beta2", "sd", 2, Contamination::C3, 1, Method::LS, 0.231},
    {"beta2", "sd", 2, Contamination::C3, 1, Method::MM, 0.081},
    {"beta2", "sd", 2, Contamination::C3, 2, Method::LS, 0.272},
    {"beta2", "sd", 2, Contamination::C3, 2, Method::MM, 0.081},
    {"beta2", "sd", 2, Contamination::C3, 3, Method::LS, 0.309},
    {"beta2", "sd", 2, Contamination::C3, 3, Method::MM, 0.225},
    {"beta2", "sd", 2, Contamination::C3, 4, Method::LS, 0.283},
    {"beta2", "sd", 2, Contamination::C3, 4, Method::MM, 0.131},
    {"beta2", "sd", 2, Contamination::C3, 5, Method::LS, 0.187},
    {"beta2", "sd", 2, Contamination::C3, 5, Method::MM, 0.184},
    {"beta2", "sd", 2, Contamination::C3, 6, Method::LS, 0.277},
    {"beta2", "sd", 2, Contamination::C3, 6, Method::MM, 0.094},
    {"beta2", "mse", 2, Contamination::C3, 1, Method::LS, 9.082},
    {"beta2", "mse", 2, Contamination::C3, 1, Method::MM, 0.006},
    {"beta2", "mse", 2, Contamination::C3, 2, Method::LS, 4.208},
    {"beta2", "mse", 2, Contamination::C3, 2, Method::MM, 0.007},
    {"beta2", "mse", 2, Contamination::C3, 3, Method::LS, 9.241},
    {"beta2", "mse", 2, Contamination::C3, 3, Method::MM, 0.05},
    {"beta2", "mse", 2, Contamination::C3, 4, Method::LS, 18.97},
    {"beta2", "mse", 2, Contamination::C3, 4, Method::MM, 0.017},
    {"beta2", "mse", 2, Contamination::C3, 5, Method::LS, 7.371},
    {"beta2", "mse", 2, Contamination::C3, 5, Method::MM, 0.034},
    {"beta2", "mse", 2, Contamination::C3, 6, Method::LS, 4.472},
    {"beta2", "mse", 2, Contamination::C3, 6, Method::MM, 0.009},
    {"mu", "mean", 0, Contamination::C0, 1, Method::LS, -0.001},
    {"mu", "mean", 0, Contamination::C0, 1, Method::MM, 0.002},
    {"mu", "mean", 0, Contamination::C0, 2, Method::LS, -0.001},
    {"mu", "mean", 0, Contamination::C0, 2, Method::MM, -0.002},
    {"mu", "mean", 0, Contamination::C0, 3, Method::LS, 0.014},
    {"mu", "mean", 0, Contamination::C0, 3, Method::MM, 0.011},
    {"mu", "mean", 0, Contamination::C0, 4, Method::LS, -0.001},
    {"mu", "mean", 0, Contamination::C0, 4, Method::MM, -0.0},
    {"mu", "mean", 0, Contamination::C0, 5, Method::LS, 0.004},
    {"mu", "mean", 0, Contamination::C0, 5, Method::MM, -0.001},
    {"mu", "mean", 0, Contamination::C0, 6, Method::LS, -0.008},
    {"mu", "mean", 0, Contamination::C0, 6, Method::MM, -0.006},
    {"mu", "sd", 0, Contamination::C0, 1, Method::LS, 0.058},
    {"mu", "sd", 0, Contamination::C0, 1, Method::MM, 0.107},
    {"mu", "sd", 0, Contamination::C0, 2, Method::LS, 0.064},
    {"mu", "sd", 0, Contamination::C0, 2, Method::MM, 0.07},
    {"mu", "sd", 0, Contamination::C0, 3, Method::LS, 0.183},
    {"mu", "sd", 0, Contamination::C0, 3, Method::MM, 0.196},
    {"mu", "sd", 0, Contamination::C0, 4, Method::LS, 0.049},
    {"mu", "sd", 0, Contamination::C0, 4, Method::MM, 0.052},
    {"mu", "sd", 0, Contamination::C0, 5, Method::LS, 0.123},
    {"mu", "sd", 0, Contamination::C0, 5, Method::MM, 0.13},
    {"mu", "sd", 0, Contamination::C0, 6, Method::LS, 0.059},
    {"mu", "sd", 0, Contamination::C0, 6, Method::MM, 0.061},
    {"mu", "mean", 0, Contamination::C1, 1, Method::LS, 0.01},
    {"mu", "mean", 0, Contamination::C1, 1, Method::MM, 0.003},
    {"mu", "mean", 0, Contamination::C1, 2, Method::LS, 0.007},
    {"mu", "mean", 0, Contamination::C1, 2, Method::MM, -0.004},
    {"mu", "mean", 0, Contamination::C1, 3, Method::LS, 0.007},
    {"mu", "mean", 0, Contamination::C1, 3, Method::MM, 0.017},
    {"mu", "mean", 0, Contamination::C1, 4, Method::LS, 0.009},
    {"mu", "mean", 0, Contamination::C1, 4, Method::MM, 0.005},
    {"mu", "mean", 0, Contamination::C1, 5, Method::LS, 0.025},
    {"mu", "mean", 0, Contamination::C1, 5, Method::MM, 0.003},
    {"mu", "mean", 0, Contamination::C1, 6, Method::LS, -0.017},
    {"mu", "mean", 0, Contamination::C1, 6, Method::MM, -0.008},
    {"mu", "sd", 0, Contamination::C1, 1, Method::LS, 0.188},
    {"mu", "sd", 0, Contamination::C1, 1, Method::MM, 0.069},
    {"mu", "sd", 0, Contamination::C1, 2, Method::LS, 0.211},
    {"mu", "sd", 0, Contamination::C1, 2, Method::MM, 0.076},
    {"mu", "sd", 0, Contamination::C1, 3, Method::LS, 0.641},
    {"mu", "sd", 0, Contamination::C1, 3, Method::MM, 0.207},
    {"mu", "sd", 0, Contamination::C1, 4, Method::LS, 0.166},
    {"mu", "sd", 0, Contamination::C1, 4, Method::MM, 0.064},
    {"mu", "sd", 0, Contamination::C1, 5, Method::LS, 0.398},
    {"mu", "sd", 0, Contamination::C1, 5, Method::MM, 0.139},
    {"mu", "sd", 0, Contamination::C1, 6, Method::LS, 0.198},
    {"mu", "sd", 0, Contamination::C1, 6, Method::MM, 0.07},
    {"mu", "mean", 0, Contamination::C2, 1, Method::LS, 2.322},
    {"mu", "mean", 0, Contamination::C2, 1, Method::MM, 0.012},
    {"mu", "mean", 0, Contamination::C2, 2, Method::LS, 2.258},
    {"mu", "mean", 0, Contamination::C2, 2, Method::MM, -0.005},
    {"mu", "mean", 0, Contamination::C2, 3, Method::LS, 2.348},
    {"mu", "mean", 0, Contamination::C2, 3, Method::MM, 0.015},
    {"mu", "mean", 0, Contamination::C2, 4, Method::LS, 2.326},
    {"mu", "mean", 0, Contamination::C2, 4, Method::MM, 0.001},
    {"mu", "mean", 0, Contamination::C2, 5, Method::LS, 2.448},
    {"mu", "mean", 0, Contamination::C2, 5, Method::MM, 0.0},
    {"mu", "mean", 0, Contamination::C2, 6, Method::LS, 2.244},
    {"mu", "mean", 0, Contamination::C2, 6, Method::MM, -0.007},
    {"mu", "sd", 0, Contamination::C2, 1, Method::LS, 1.586},
    {"mu", "sd", 0, Contamination::C2, 1, Method::MM, 0.185},
    {"mu", "sd", 0, Contamination::C2, 2, Method::LS, 1.928},
    {"mu", "sd", 0, Contamination::C2, 2, Method::MM, 0.072},
    {"mu", "sd", 0, Contamination::C2, 3, Method::LS, 5.161},
    {"mu", "sd", 0, Contamination::C2, 3, Method::MM, 0.202},
    {"mu", "sd", 0, Contamination::C2, 4, Method::LS, 1.326},
    {"mu", "sd", 0, Contamination::C2, 4, Method::MM, 0.056},
    {"mu", "sd", 0, Contamination::C2, 5, Method::LS, 3.263},
    {"mu", "sd", 0, Contamination::C2, 5, Method::MM, 0.155},
    {"mu", "sd", 0, Contamination::C2, 6, Method::LS, 1.53},
    {"mu", "sd", 0, Contamination::C2, 6, Method::MM, 0.066},
    {"mu", "mean", 0, Contamination::C3, 1, Method::LS, 2.988},
    {"mu", "mean", 0, Contamination::C3, 1, Method::MM, 0.01},
    {"mu", "mean", 0, Contamination::C3, 2, Method::LS, 2.995},
    {"mu", "mean", 0, Contamination::C3, 2, Method::MM, -0.003},
    {"mu", "mean", 0, Contamination::C3, 3, Method::LS, 3.564},
    {"mu", "mean", 0, Contamination::C3, 3, Method::MM, 0.006},
    {"mu", "mean", 0, Contamination::C3, 4, Method::LS, 1.675},
    {"mu", "mean", 0, Contamination::C3, 4, Method::MM, -0.0},
    {"mu", "mean", 0, Contamination::C3, 5, Method::LS, 2.174},
    {"mu", "mean", 0, Contamination::C3, 5, Method::MM, 0.001},
    {"mu", "mean", 0, Contamination::C3, 6, Method::LS, 2.183},
    {"mu", "mean", 0, Contamination::C3, 6, Method::MM, -0.007},
    {"mu", "sd", 0, Contamination::C3, 1, Method::LS, 0.143},
    {"mu", "sd", 0, Contamination::C3, 1, Method::MM, 0.231},
    {"mu", "sd", 0, Contamination::C3, 2, Method::LS, 0.123},
    {"mu", "sd", 0, Contamination::C3, 2, Method::MM, 0.074},
    {"mu", "sd", 0, Contamination::C3, 3, Method::LS, 0.166},
    {"mu", "sd", 0, Contamination::C3, 3, Method::MM, 0.207},
    {"mu", "sd", 0, Contamination::C3, 4, Method::LS, 0.152},
    {"mu", "sd", 0, Contamination::C3, 4, Method::MM, 0.053},
    {"mu", "sd", 0, Contamination::C3, 5, Method::LS, 0.072},
    {"mu", "sd", 0, Contamination::C3, 5, Method::MM, 0.133},
    {"mu", "sd", 0, Contamination::C3, 6, Method::LS, 0.16},
    {"mu", "sd", 0, Contamination::C3, 6, Method::MM, 0.064},
};
// clang-format on

}  // namespace

std::span<const ReferenceCell> reference_cells() { return kCells; }

}  // namespace robplam
