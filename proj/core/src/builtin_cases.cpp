#include <algorithm>
#include <string>
#include <utility>

#include "noether/case_script.hpp"
#include "noether/error.hpp"

namespace noether {

namespace {

// Claim argument layouts:
//   table        {action, images: [[symbol, image], ...]}
//   invariance   {symbols, actions, expected (default true)}
//   identity     {lhs, rhs}
//   tower        {targets, generators, group, levels: [{over, roots, coefficients c0..cr}], in_targets}
//   relation     {word, on, permutation_identity (default true)}
//   monomial     {symbols, actions, expected: "purely-monomial" | "monomial"}
//   birational   {from, to, inverse: [[symbol, expression in `to`], ...]}
//   catalog      {group, actions, relabeled (default false)}
//   independence {functions, variables}
//   fiber        {maps, variables, expected}
//   cited        {reference, statement}

constexpr const char* kCase1 = R"json({
  "id": "case1",
  "title": "G1 = C6 acting regularly; rationality rests on the cited result for cyclic groups of order 6",
  "characteristic": {"rule": "any", "default": 0},
  "base_vars": ["x1", "x2", "x3", "x4", "x5", "x6"],
  "actions": [["sigma", "(1,2,3,4,5,6)"]],
  "claims": [
    {"kind": "catalog", "group": "G1", "actions": ["sigma"]}
  ]
})json";

constexpr const char* kCase2 = R"json({
  "id": "case2",
  "title": "G2 = S3 acting by ratios: a purely monomial action on y1, y2, y3",
  "characteristic": {"rule": "any", "default": 0},
  "base_vars": ["x1", "x2", "x3", "x4", "x5", "x6"],
  "actions": [["sigma", "(1,3,5)(2,6,4)"], ["tau", "(1,2)(3,4)(5,6)"]],
  "defs": [["y1", "x1/x2"], ["y2", "x3/x6"], ["y3", "x5/x4"]],
  "coordinates": {
    "symbols": ["y1", "y2", "y3", "x2", "x4", "x6"],
    "inverse": [["x1", "y1*x2"], ["x3", "y2*x6"], ["x5", "y3*x4"]]
  },
  "claims": [
    {"kind": "catalog", "group": "G2", "actions": ["sigma", "tau"]},
    {"kind": "table", "action": "sigma", "images": [["y1", "y2"], ["y2", "y3"], ["y3", "y1"]]},
    {"kind": "table", "action": "tau", "images": [["y1", "1/y1"], ["y2", "1/y3"], ["y3", "1/y2"]]},
    {"kind": "cited", "reference": "no-name lemma",
     "statement": "k(y1,y2,y3,x2,x4,x6)^G = k(y1,y2,y3)^G(t1,t2,t3)"},
    {"kind": "monomial", "symbols": ["y1", "y2", "y3"], "actions": ["sigma", "tau"], "expected": "purely-monomial"},
    {"kind": "relation", "word": "sigma^3", "on": ["y1", "y2", "y3"]},
    {"kind": "relation", "word": "tau^2", "on": ["y1", "y2", "y3"]},
    {"kind": "relation", "word": "(tau*sigma)^2", "on": ["y1", "y2", "y3"]},
    {"kind": "cited", "reference": "purely monomial actions in three variables",
     "statement": "k(y1,y2,y3)^G is rational over k"}
  ]
})json";

constexpr const char* kCase3_1 = R"json({
  "id": "case3.1",
  "title": "G3 = D6, char k != 2: sums and differences, then a monomial action on y1/y3, y2/y3",
  "characteristic": {"rule": "ne", "values": [2], "default": 0},
  "base_vars": ["x1", "x2", "x3", "x4", "x5", "x6"],
  "actions": [["sigma", "(1,2,3,4,5,6)"], ["tau", "(1,6)(2,5)(3,4)"]],
  "defs": [
    ["y1", "x1-x4"], ["y2", "x2-x5"], ["y3", "x3-x6"],
    ["y4", "x1+x4"], ["y5", "x2+x5"], ["y6", "x3+x6"],
    ["w1", "y1/y3"], ["w2", "y2/y3"]
  ],
  "coordinates": {
    "symbols": ["y1", "y2", "y3", "y4", "y5", "y6"],
    "inverse": [["x1", "(y1+y4)/2"], ["x2", "(y2+y5)/2"], ["x3", "(y3+y6)/2"],
                ["x4", "(y4-y1)/2"], ["x5", "(y5-y2)/2"], ["x6", "(y6-y3)/2"]]
  },
  "claims": [
    {"kind": "catalog", "group": "G3", "actions": ["sigma", "tau"]},
    {"kind": "table", "action": "sigma",
     "images": [["y1", "y2"], ["y2", "y3"], ["y3", "-y1"], ["y4", "y5"], ["y5", "y6"], ["y6", "y4"]]},
    {"kind": "table", "action": "tau",
     "images": [["y1", "-y3"], ["y2", "-y2"], ["y3", "-y1"], ["y4", "y6"], ["y5", "y5"], ["y6", "y4"]]},
    {"kind": "relation", "word": "sigma^6", "on": ["y1", "y2", "y3", "y4", "y5", "y6"]},
    {"kind": "relation", "word": "tau^2", "on": ["y1", "y2", "y3", "y4", "y5", "y6"]},
    {"kind": "relation", "word": "(tau*sigma)^2", "on": ["y1", "y2", "y3", "y4", "y5", "y6"]},
    {"kind": "cited", "reference": "no-name lemma",
     "statement": "k(y1,...,y6)^G = k(y1,y2,y3)^G(t1,t2,t3)"},
    {"kind": "birational", "from": ["y1", "y2", "y3"], "to": ["w1", "w2", "y3"],
     "inverse": [["y1", "w1*y3"], ["y2", "w2*y3"]]},
    {"kind": "table", "action": "sigma", "images": [["w1", "-w2/w1"], ["w2", "-1/w1"], ["y3", "-w1*y3"]]},
    {"kind": "table", "action": "tau", "images": [["w1", "1/w1"], ["w2", "w2/w1"], ["y3", "-w1*y3"]]},
    {"kind": "monomial", "symbols": ["w1", "w2"], "actions": ["sigma", "tau"], "expected": "monomial"},
    {"kind": "relation", "word": "sigma^6", "on": ["w1", "w2"]},
    {"kind": "relation", "word": "(tau*sigma)^2", "on": ["w1", "w2"]},
    {"kind": "cited", "reference": "affine action over an invariant subfield",
     "statement": "k(w1,w2,y3)^G = k(w1,w2)^G(t)"},
    {"kind": "cited", "reference": "monomial actions in two variables are rational",
     "statement": "k(w1,w2)^G is rational over k"}
  ]
})json";

constexpr const char* kCase3_2 = R"json({
  "id": "case3.2",
  "title": "G3 = D6, char k = 2: Artin-Schreier style coordinates and a cubic tower over k(u,v)",
  "characteristic": {"rule": "eq", "values": [2], "default": 2},
  "base_vars": ["x1", "x2", "x3", "x4", "x5", "x6"],
  "actions": [["sigma", "(1,2,3,4,5,6)"], ["tau", "(1,6)(2,5)(3,4)"]],
  "defs": [
    ["y1", "x1/(x1+x4)"], ["y2", "x2/(x2+x5)"], ["y3", "x3/(x3+x6)"],
    ["y4", "x1+x4"], ["y5", "x2+x5"], ["y6", "x3+x6"],
    ["z1", "y1*(y1+1)"], ["z2", "y1+y2"], ["z3", "y2+y3"], ["z4", "z2+z3+1"],
    ["u", "z2*z3+z2*z4+z3*z4"], ["v", "z2*z3*z4"]
  ],
  "coordinates": {
    "symbols": ["y1", "y2", "y3", "y4", "y5", "y6"],
    "inverse": [["x1", "y1*y4"], ["x2", "y2*y5"], ["x3", "y3*y6"],
                ["x4", "y4+y1*y4"], ["x5", "y5+y2*y5"], ["x6", "y6+y3*y6"]]
  },
  "claims": [
    {"kind": "catalog", "group": "G3", "actions": ["sigma", "tau"]},
    {"kind": "table", "action": "sigma",
     "images": [["y1", "y2"], ["y2", "y3"], ["y3", "y1+1"], ["y4", "y5"], ["y5", "y6"], ["y6", "y4"]]},
    {"kind": "table", "action": "tau",
     "images": [["y1", "y3+1"], ["y2", "y2+1"], ["y3", "y1+1"], ["y4", "y6"], ["y5", "y5"], ["y6", "y4"]]},
    {"kind": "relation", "word": "sigma^6", "on": ["y1", "y2", "y3", "y4", "y5", "y6"]},
    {"kind": "relation", "word": "tau^2", "on": ["y1", "y2", "y3", "y4", "y5", "y6"]},
    {"kind": "relation", "word": "(tau*sigma)^2", "on": ["y1", "y2", "y3", "y4", "y5", "y6"]},
    {"kind": "cited", "reference": "no-name lemma",
     "statement": "k(y1,...,y6)^G = k(y1,y2,y3)^G(t1,t2,t3)"},
    {"kind": "invariance", "symbols": ["z1", "z2", "z3"], "actions": ["sigma^3"]},
    {"kind": "tower", "targets": ["y1", "y2", "y3"], "generators": ["z1", "z2", "z3"], "group": ["sigma^3"],
     "levels": [
       {"over": ["z1", "z2", "z3"], "roots": ["y1", "y1+1"], "coefficients": ["z1", "1", "1"]},
       {"over": ["z1", "z2", "z3", "y1"], "roots": ["y2"], "coefficients": ["z2+y1", "1"]},
       {"over": ["z1", "z2", "z3", "y1", "y2"], "roots": ["y3"], "coefficients": ["z3+y2", "1"]}
     ]},
    {"kind": "table", "action": "sigma",
     "images": [["z1", "z1+z2^2+z2"], ["z2", "z3"], ["z3", "z2+z3+1"], ["z4", "z2"]]},
    {"kind": "table", "action": "tau",
     "images": [["z1", "z1+z2^2+z3^2+z2+z3"], ["z2", "z3"], ["z3", "z2"], ["z4", "z4"]]},
    {"kind": "relation", "word": "sigma^3", "on": ["z1", "z2", "z3"], "permutation_identity": false},
    {"kind": "relation", "word": "tau^2", "on": ["z1", "z2", "z3"]},
    {"kind": "relation", "word": "(tau*sigma)^2", "on": ["z1", "z2", "z3"]},
    {"kind": "cited", "reference": "affine action over an invariant subfield",
     "statement": "k(z1,z2,z3)^G = k(z2,z3)^G(t)"},
    {"kind": "identity", "lhs": "z2+z3+z4", "rhs": "1"},
    {"kind": "identity", "lhs": "u", "rhs": "z2^2+z2*z3+z3^2+z2+z3"},
    {"kind": "identity", "lhs": "v", "rhs": "z2^2*z3+z2*z3^2+z2*z3"},
    {"kind": "invariance", "symbols": ["u", "v"], "actions": ["sigma", "tau"]},
    {"kind": "tower", "targets": ["z2", "z3"], "generators": ["u", "v"], "group": ["sigma", "tau"],
     "in_targets": [["u", "z2^2+z2*z3+z3^2+z2+z3"], ["v", "z2^2*z3+z2*z3^2+z2*z3"]],
     "levels": [
       {"over": ["u", "v"], "roots": ["z2", "z3", "z4"], "coefficients": ["v", "u", "1", "1"]},
       {"over": ["u", "v", "z2"], "roots": ["z3", "z4"], "coefficients": ["v/z2", "z2+1", "1"]}
     ]}
  ]
})json";

constexpr const char* kCase4_1 = R"json({
  "id": "case4.1",
  "title": "G5 = G4 cap A6, char k != 2: reduction to S3 permuting z1, z2, z3",
  "characteristic": {"rule": "ne", "values": [2], "default": 0},
  "base_vars": ["x1", "x2", "x3", "x4", "x5", "x6"],
  "actions": [["sigma", "(1,2,3)(4,5,6)"], ["tau", "(1,2)(4,5)"],
              ["lambda1", "(1,4)(2,5)"], ["lambda2", "(2,5)(3,6)"]],
  "defs": [
    ["y1", "x1-x4"], ["y2", "x2-x5"], ["y3", "x3-x6"],
    ["y4", "x1+x4"], ["y5", "x2+x5"], ["y6", "x3+x6"],
    ["z1", "y2*y3/y1"], ["z2", "y1*y3/y2"], ["z3", "y1*y2/y3"],
    ["s1", "z1+z2+z3"], ["s2", "z1*z2+z1*z3+z2*z3"], ["s3", "z1*z2*z3"],
    ["q1", "z1/z3"], ["q2", "z2/z3"]
  ],
  "coordinates": {
    "symbols": ["y1", "y2", "y3", "y4", "y5", "y6"],
    "inverse": [["x1", "(y1+y4)/2"], ["x2", "(y2+y5)/2"], ["x3", "(y3+y6)/2"],
                ["x4", "(y4-y1)/2"], ["x5", "(y5-y2)/2"], ["x6", "(y6-y3)/2"]]
  },
  "claims": [
    {"kind": "catalog", "group": "G5", "actions": ["sigma", "tau", "lambda1"]},
    {"kind": "relation", "word": "lambda2^-1*sigma*lambda1*sigma^-1", "on": ["y1", "y2", "y3", "y4", "y5", "y6"]},
    {"kind": "table", "action": "lambda1",
     "images": [["y1", "-y1"], ["y2", "-y2"], ["y3", "y3"], ["y4", "y4"], ["y5", "y5"], ["y6", "y6"]]},
    {"kind": "table", "action": "lambda2",
     "images": [["y1", "y1"], ["y2", "-y2"], ["y3", "-y3"], ["y4", "y4"], ["y5", "y5"], ["y6", "y6"]]},
    {"kind": "table", "action": "sigma",
     "images": [["y1", "y2"], ["y2", "y3"], ["y3", "y1"], ["y4", "y5"], ["y5", "y6"], ["y6", "y4"]]},
    {"kind": "table", "action": "tau",
     "images": [["y1", "y2"], ["y2", "y1"], ["y3", "y3"], ["y4", "y5"], ["y5", "y4"], ["y6", "y6"]]},
    {"kind": "relation", "word": "lambda1^2", "on": ["y1", "y2", "y3", "y4", "y5", "y6"]},
    {"kind": "relation", "word": "(lambda1*lambda2)^2", "on": ["y1", "y2", "y3", "y4", "y5", "y6"]},
    {"kind": "relation", "word": "sigma^3", "on": ["y1", "y2", "y3", "y4", "y5", "y6"]},
    {"kind": "relation", "word": "(tau*sigma)^2", "on": ["y1", "y2", "y3", "y4", "y5", "y6"]},
    {"kind": "cited", "reference": "no-name lemma",
     "statement": "k(y1,...,y6)^G = k(y1,y2,y3)^G(t1,t2,t3)"},
    {"kind": "invariance", "symbols": ["z1", "z2", "z3"], "actions": ["lambda1", "lambda2"]},
    {"kind": "tower", "targets": ["y1", "y2", "y3"], "generators": ["z1", "z2", "z3"], "group": ["lambda1", "lambda2"],
     "levels": [
       {"over": ["z1", "z2", "z3"], "roots": ["y1", "-y1"], "coefficients": ["-z2*z3", "0", "1"]},
       {"over": ["z1", "z2", "z3", "y1"], "roots": ["y2", "-y2"], "coefficients": ["-z1*z3", "0", "1"]},
       {"over": ["z1", "z2", "z3", "y1", "y2"], "roots": ["y3"], "coefficients": ["-z2*y2/y1", "1"]}
     ]},
    {"kind": "independence", "functions": ["z1", "z2", "z3"], "variables": ["y1", "y2", "y3"]},
    {"kind": "table", "action": "sigma", "images": [["z1", "z2"], ["z2", "z3"], ["z3", "z1"]]},
    {"kind": "table", "action": "tau", "images": [["z1", "z2"], ["z2", "z1"], ["z3", "z3"]]},
    {"kind": "relation", "word": "sigma^3", "on": ["z1", "z2", "z3"]},
    {"kind": "relation", "word": "tau^2", "on": ["z1", "z2", "z3"]},
    {"kind": "relation", "word": "(tau*sigma)^2", "on": ["z1", "z2", "z3"]},
    {"kind": "invariance", "symbols": ["s1", "s2", "s3"], "actions": ["sigma", "tau"]},
    {"kind": "tower", "targets": ["z1", "z2", "z3"], "generators": ["s1", "s2", "s3"], "group": ["sigma", "tau"],
     "levels": [
       {"over": ["s1", "s2", "s3"], "roots": ["z1", "z2", "z3"], "coefficients": ["-s3", "s2", "-s1", "1"]},
       {"over": ["s1", "s2", "s3", "z1"], "roots": ["z2", "z3"], "coefficients": ["s3/z1", "z1-s1", "1"]},
       {"over": ["s1", "s2", "s3", "z1", "z2"], "roots": ["z3"], "coefficients": ["z1+z2-s1", "1"]}
     ]},
    {"kind": "fiber", "maps": ["s1", "s2", "s3"], "variables": ["z1", "z2", "z3"], "expected": 6},
    {"kind": "table", "action": "sigma", "images": [["q1", "q2/q1"], ["q2", "1/q1"]]},
    {"kind": "table", "action": "tau", "images": [["q1", "q2"], ["q2", "q1"]]},
    {"kind": "monomial", "symbols": ["q1", "q2"], "actions": ["sigma", "tau"], "expected": "purely-monomial"}
  ]
})json";

constexpr const char* kCase4_2 = R"json({
  "id": "case4.2",
  "title": "G5 = G4 cap A6, char k = 2: reduction to S3 acting on z1, z2, z3 and a cubic tower over k(z3,u,v)",
  "characteristic": {"rule": "eq", "values": [2], "default": 2},
  "base_vars": ["x1", "x2", "x3", "x4", "x5", "x6"],
  "actions": [["sigma", "(1,2,3)(4,5,6)"], ["tau", "(1,2)(4,5)"],
              ["lambda1", "(1,4)(2,5)"], ["lambda2", "(2,5)(3,6)"]],
  "defs": [
    ["y1", "x1/(x1+x4)"], ["y2", "x2/(x2+x5)"], ["y3", "x3/(x3+x6)"],
    ["y4", "x1+x4"], ["y5", "x2+x5"], ["y6", "x3+x6"],
    ["z1", "y1*(y1+1)"], ["z2", "y2*(y2+1)"], ["z3", "y1+y2+y3"], ["z4", "z1+z2+z3^2+z3"],
    ["u", "z1*z2+z1*z4+z2*z4"], ["v", "z1*z2*z4"]
  ],
  "coordinates": {
    "symbols": ["y1", "y2", "y3", "y4", "y5", "y6"],
    "inverse": [["x1", "y1*y4"], ["x2", "y2*y5"], ["x3", "y3*y6"],
                ["x4", "y4+y1*y4"], ["x5", "y5+y2*y5"], ["x6", "y6+y3*y6"]]
  },
  "claims": [
    {"kind": "catalog", "group": "G5", "actions": ["sigma", "tau", "lambda1"]},
    {"kind": "relation", "word": "lambda2^-1*sigma*lambda1*sigma^-1", "on": ["y1", "y2", "y3", "y4", "y5", "y6"]},
    {"kind": "table", "action": "lambda1",
     "images": [["y1", "y1+1"], ["y2", "y2+1"], ["y3", "y3"], ["y4", "y4"], ["y5", "y5"], ["y6", "y6"]]},
    {"kind": "table", "action": "lambda2",
     "images": [["y1", "y1"], ["y2", "y2+1"], ["y3", "y3+1"], ["y4", "y4"], ["y5", "y5"], ["y6", "y6"]]},
    {"kind": "table", "action": "sigma",
     "images": [["y1", "y2"], ["y2", "y3"], ["y3", "y1"], ["y4", "y5"], ["y5", "y6"], ["y6", "y4"]]},
    {"kind": "table", "action": "tau",
     "images": [["y1", "y2"], ["y2", "y1"], ["y3", "y3"], ["y4", "y5"], ["y5", "y4"], ["y6", "y6"]]},
    {"kind": "relation", "word": "lambda1^2", "on": ["y1", "y2", "y3", "y4", "y5", "y6"]},
    {"kind": "relation", "word": "(lambda1*lambda2)^2", "on": ["y1", "y2", "y3", "y4", "y5", "y6"]},
    {"kind": "relation", "word": "sigma^3", "on": ["y1", "y2", "y3", "y4", "y5", "y6"]},
    {"kind": "relation", "word": "(tau*sigma)^2", "on": ["y1", "y2", "y3", "y4", "y5", "y6"]},
    {"kind": "cited", "reference": "no-name lemma",
     "statement": "k(y1,...,y6)^G = k(y1,y2,y3)^G(t1,t2,t3)"},
    {"kind": "invariance", "symbols": ["z1", "z2", "z3"], "actions": ["lambda1", "lambda2"]},
    {"kind": "tower", "targets": ["y1", "y2", "y3"], "generators": ["z1", "z2", "z3"], "group": ["lambda1", "lambda2"],
     "levels": [
       {"over": ["z1", "z2", "z3"], "roots": ["y1", "y1+1"], "coefficients": ["z1", "1", "1"]},
       {"over": ["z1", "z2", "z3", "y1"], "roots": ["y2", "y2+1"], "coefficients": ["z2", "1", "1"]},
       {"over": ["z1", "z2", "z3", "y1", "y2"], "roots": ["y3"], "coefficients": ["z3+y1+y2", "1"]}
     ]},
    {"kind": "table", "action": "sigma",
     "images": [["z1", "z2"], ["z2", "z1+z2+z3^2+z3"], ["z3", "z3"], ["z4", "z1"]]},
    {"kind": "table", "action": "tau", "images": [["z1", "z2"], ["z2", "z1"], ["z3", "z3"], ["z4", "z4"]]},
    {"kind": "relation", "word": "sigma^3", "on": ["z1", "z2", "z3"]},
    {"kind": "relation", "word": "tau^2", "on": ["z1", "z2", "z3"]},
    {"kind": "relation", "word": "(tau*sigma)^2", "on": ["z1", "z2", "z3"]},
    {"kind": "identity", "lhs": "z1+z2+z4", "rhs": "z3^2+z3"},
    {"kind": "identity", "lhs": "u", "rhs": "z1^2+z1*z2+z2^2+(z1+z2)*(z3^2+z3)"},
    {"kind": "identity", "lhs": "v", "rhs": "z1^2*z2+z1*z2^2+z1*z2*(z3^2+z3)"},
    {"kind": "invariance", "symbols": ["z3", "u", "v"], "actions": ["sigma", "tau"]},
    {"kind": "tower", "targets": ["z1", "z2", "z3"], "generators": ["z3", "u", "v"], "group": ["sigma", "tau"],
     "in_targets": [["u", "z1^2+z1*z2+z2^2+(z1+z2)*(z3^2+z3)"], ["v", "z1^2*z2+z1*z2^2+z1*z2*(z3^2+z3)"]],
     "levels": [
       {"over": ["z3", "u", "v"], "roots": ["z1", "z2", "z4"], "coefficients": ["v", "u", "z3^2+z3", "1"]},
       {"over": ["z3", "u", "v", "z1"], "roots": ["z2", "z4"], "coefficients": ["v/z1", "z1+z3^2+z3", "1"]}
     ]}
  ]
})json";

constexpr const char* kCase5_1 = R"json({
  "id": "case5.1",
  "title": "G6 = S4 and G7 = A4, char k != 2: the same z coordinates with tau acting by signed transposition",
  "characteristic": {"rule": "ne", "values": [2], "default": 0},
  "base_vars": ["x1", "x2", "x3", "x4", "x5", "x6"],
  "actions": [["sigma", "(1,2,3)(4,5,6)"], ["tau", "(1,5,4,2)"],
              ["lambda1", "(1,4)(2,5)"], ["lambda2", "(2,5)(3,6)"]],
  "defs": [
    ["y1", "x1-x4"], ["y2", "x2-x5"], ["y3", "x3-x6"],
    ["y4", "x1+x4"], ["y5", "x2+x5"], ["y6", "x3+x6"],
    ["z1", "y2*y3/y1"], ["z2", "y1*y3/y2"], ["z3", "y1*y2/y3"],
    ["q1", "z1/z3"], ["q2", "z2/z3"]
  ],
  "coordinates": {
    "symbols": ["y1", "y2", "y3", "y4", "y5", "y6"],
    "inverse": [["x1", "(y1+y4)/2"], ["x2", "(y2+y5)/2"], ["x3", "(y3+y6)/2"],
                ["x4", "(y4-y1)/2"], ["x5", "(y5-y2)/2"], ["x6", "(y6-y3)/2"]]
  },
  "claims": [
    {"kind": "catalog", "group": "G6", "actions": ["sigma", "tau"]},
    {"kind": "catalog", "group": "G7", "actions": ["sigma", "lambda1"]},
    {"kind": "relation", "word": "lambda1^-1*tau^2", "on": ["y1", "y2", "y3", "y4", "y5", "y6"]},
    {"kind": "relation", "word": "lambda2^-1*sigma*lambda1*sigma^-1", "on": ["y1", "y2", "y3", "y4", "y5", "y6"]},
    {"kind": "table", "action": "lambda1",
     "images": [["y1", "-y1"], ["y2", "-y2"], ["y3", "y3"], ["y4", "y4"], ["y5", "y5"], ["y6", "y6"]]},
    {"kind": "table", "action": "lambda2",
     "images": [["y1", "y1"], ["y2", "-y2"], ["y3", "-y3"], ["y4", "y4"], ["y5", "y5"], ["y6", "y6"]]},
    {"kind": "table", "action": "sigma",
     "images": [["y1", "y2"], ["y2", "y3"], ["y3", "y1"], ["y4", "y5"], ["y5", "y6"], ["y6", "y4"]]},
    {"kind": "table", "action": "tau",
     "images": [["y1", "-y2"], ["y2", "y1"], ["y3", "y3"], ["y4", "y5"], ["y5", "y4"], ["y6", "y6"]]},
    {"kind": "relation", "word": "tau^4", "on": ["y1", "y2", "y3", "y4", "y5", "y6"]},
    {"kind": "relation", "word": "sigma^3", "on": ["y1", "y2", "y3", "y4", "y5", "y6"]},
    {"kind": "cited", "reference": "no-name lemma",
     "statement": "k(y1,...,y6)^G = k(y1,y2,y3)^G(t1,t2,t3)"},
    {"kind": "invariance", "symbols": ["z1", "z2", "z3"], "actions": ["lambda1", "lambda2"]},
    {"kind": "tower", "targets": ["y1", "y2", "y3"], "generators": ["z1", "z2", "z3"], "group": ["lambda1", "lambda2"],
     "levels": [
       {"over": ["z1", "z2", "z3"], "roots": ["y1", "-y1"], "coefficients": ["-z2*z3", "0", "1"]},
       {"over": ["z1", "z2", "z3", "y1"], "roots": ["y2", "-y2"], "coefficients": ["-z1*z3", "0", "1"]},
       {"over": ["z1", "z2", "z3", "y1", "y2"], "roots": ["y3"], "coefficients": ["-z2*y2/y1", "1"]}
     ]},
    {"kind": "independence", "functions": ["z1", "z2", "z3"], "variables": ["y1", "y2", "y3"]},
    {"kind": "table", "action": "sigma", "images": [["z1", "z2"], ["z2", "z3"], ["z3", "z1"]]},
    {"kind": "table", "action": "tau", "images": [["z1", "-z2"], ["z2", "-z1"], ["z3", "-z3"]]},
    {"kind": "relation", "word": "sigma^3", "on": ["z1", "z2", "z3"]},
    {"kind": "relation", "word": "tau^4", "on": ["z1", "z2", "z3"]},
    {"kind": "cited", "reference": "rationality of the cyclic group of order 3",
     "statement": "k(z1,z2,z3)^<sigma> is rational over k"},
    {"kind": "birational", "from": ["z1", "z2", "z3"], "to": ["q1", "q2", "z3"],
     "inverse": [["z1", "q1*z3"], ["z2", "q2*z3"]]},
    {"kind": "table", "action": "sigma", "images": [["q1", "q2/q1"], ["q2", "1/q1"]]},
    {"kind": "table", "action": "tau", "images": [["q1", "q2"], ["q2", "q1"]]},
    {"kind": "monomial", "symbols": ["q1", "q2"], "actions": ["sigma", "tau"], "expected": "purely-monomial"},
    {"kind": "cited", "reference": "affine action over an invariant subfield",
     "statement": "k(q1,q2,z3)^G = k(q1,q2)^G(t)"},
    {"kind": "cited", "reference": "monomial actions in two variables are rational",
     "statement": "k(q1,q2)^G is rational over k"}
  ]
})json";

constexpr const char* kCase5_2 = R"json({
  "id": "case5.2",
  "title": "G6 = S4 and G7 = A4, char k = 2: coordinates z3, z4, z5 and a cubic tower over k(t2,t3)",
  "characteristic": {"rule": "eq", "values": [2], "default": 2},
  "base_vars": ["x1", "x2", "x3", "x4", "x5", "x6"],
  "actions": [["sigma", "(1,2,3)(4,5,6)"], ["tau", "(1,5,4,2)"],
              ["lambda1", "(1,4)(2,5)"], ["lambda2", "(2,5)(3,6)"]],
  "defs": [
    ["y1", "x1/(x1+x4)"], ["y2", "x2/(x2+x5)"], ["y3", "x3/(x3+x6)"],
    ["y4", "x1+x4"], ["y5", "x2+x5"], ["y6", "x3+x6"],
    ["z1", "y1*(y1+1)"], ["z2", "y2*(y2+1)"], ["z3", "y1+y2+y3"],
    ["z4", "z1+z3^2+z3"], ["z5", "z2+z3^2+z3"],
    ["t2", "z4*z5+z4*(z4+z5)+z5*(z4+z5)"], ["t3", "z4*z5*(z4+z5)"]
  ],
  "coordinates": {
    "symbols": ["y1", "y2", "y3", "y4", "y5", "y6"],
    "inverse": [["x1", "y1*y4"], ["x2", "y2*y5"], ["x3", "y3*y6"],
                ["x4", "y4+y1*y4"], ["x5", "y5+y2*y5"], ["x6", "y6+y3*y6"]]
  },
  "claims": [
    {"kind": "catalog", "group": "G6", "actions": ["sigma", "tau"]},
    {"kind": "catalog", "group": "G7", "actions": ["sigma", "lambda1"]},
    {"kind": "relation", "word": "lambda1^-1*tau^2", "on": ["y1", "y2", "y3", "y4", "y5", "y6"]},
    {"kind": "relation", "word": "lambda2^-1*sigma*lambda1*sigma^-1", "on": ["y1", "y2", "y3", "y4", "y5", "y6"]},
    {"kind": "table", "action": "lambda1",
     "images": [["y1", "y1+1"], ["y2", "y2+1"], ["y3", "y3"], ["y4", "y4"], ["y5", "y5"], ["y6", "y6"]]},
    {"kind": "table", "action": "lambda2",
     "images": [["y1", "y1"], ["y2", "y2+1"], ["y3", "y3+1"], ["y4", "y4"], ["y5", "y5"], ["y6", "y6"]]},
    {"kind": "table", "action": "sigma",
     "images": [["y1", "y2"], ["y2", "y3"], ["y3", "y1"], ["y4", "y5"], ["y5", "y6"], ["y6", "y4"]]},
    {"kind": "table", "action": "tau",
     "images": [["y1", "y2+1"], ["y2", "y1"], ["y3", "y3"], ["y4", "y5"], ["y5", "y4"], ["y6", "y6"]]},
    {"kind": "relation", "word": "tau^4", "on": ["y1", "y2", "y3", "y4", "y5", "y6"]},
    {"kind": "relation", "word": "sigma^3", "on": ["y1", "y2", "y3", "y4", "y5", "y6"]},
    {"kind": "cited", "reference": "no-name lemma",
     "statement": "k(y1,...,y6)^G = k(y1,y2,y3)^G(t1,t2,t3)"},
    {"kind": "invariance", "symbols": ["z1", "z2", "z3"], "actions": ["lambda1", "lambda2"]},
    {"kind": "tower", "targets": ["y1", "y2", "y3"], "generators": ["z1", "z2", "z3"], "group": ["lambda1", "lambda2"],
     "levels": [
       {"over": ["z1", "z2", "z3"], "roots": ["y1", "y1+1"], "coefficients": ["z1", "1", "1"]},
       {"over": ["z1", "z2", "z3", "y1"], "roots": ["y2", "y2+1"], "coefficients": ["z2", "1", "1"]},
       {"over": ["z1", "z2", "z3", "y1", "y2"], "roots": ["y3"], "coefficients": ["z3+y1+y2", "1"]}
     ]},
    {"kind": "table", "action": "sigma",
     "images": [["z1", "z2"], ["z2", "z1+z2+z3^2+z3"], ["z3", "z3"]]},
    {"kind": "table", "action": "tau", "images": [["z1", "z2"], ["z2", "z1"], ["z3", "z3+1"]]},
    {"kind": "birational", "from": ["z1", "z2", "z3"], "to": ["z3", "z4", "z5"],
     "inverse": [["z1", "z4+z3^2+z3"], ["z2", "z5+z3^2+z3"]]},
    {"kind": "table", "action": "sigma", "images": [["z3", "z3"], ["z4", "z5"], ["z5", "z4+z5"]]},
    {"kind": "table", "action": "tau", "images": [["z3", "z3+1"], ["z4", "z5"], ["z5", "z4"]]},
    {"kind": "relation", "word": "sigma^3", "on": ["z3", "z4", "z5"]},
    {"kind": "relation", "word": "tau^4", "on": ["z3", "z4", "z5"]},
    {"kind": "invariance", "symbols": ["z3"], "actions": ["sigma"]},
    {"kind": "invariance", "symbols": ["z3"], "actions": ["tau"], "expected": false},
    {"kind": "cited", "reference": "affine action over an invariant subfield",
     "statement": "k(z3,z4,z5)^G = k(z4,z5)^G(t)"},
    {"kind": "identity", "lhs": "z4+z5+(z4+z5)", "rhs": "0"},
    {"kind": "invariance", "symbols": ["t2", "t3"], "actions": ["sigma", "tau"]},
    {"kind": "tower", "targets": ["z4", "z5"], "generators": ["t2", "t3"], "group": ["sigma", "tau"],
     "levels": [
       {"over": ["t2", "t3"], "roots": ["z4", "z5", "z4+z5"], "coefficients": ["t3", "t2", "0", "1"]},
       {"over": ["t2", "t3", "z4"], "roots": ["z5", "z4+z5"], "coefficients": ["t3/z4", "z4", "1"]}
     ]},
    {"kind": "cited", "reference": "Lueroth's theorem",
     "statement": "k(z4,z5)^<sigma,lambda1> is rational over k"}
  ]
})json";

constexpr const char* kStep5 = R"json({
  "id": "thm31-step5",
  "title": "G14 = PSL2(F5) on six points: traceless coordinates y_i = x_i - y0/6 and the ratios y_i/y5",
  "characteristic": {"rule": "ne", "values": [2, 3], "default": 0},
  "base_vars": ["x1", "x2", "x3", "x4", "x5", "x6"],
  "actions": [["sigma", "(1,2,3,4,5)"], ["tau", "(1,6)(2,5)"]],
  "defs": [
    ["y0", "x1+x2+x3+x4+x5+x6"],
    ["y1", "x1-y0/6"], ["y2", "x2-y0/6"], ["y3", "x3-y0/6"],
    ["y4", "x4-y0/6"], ["y5", "x5-y0/6"], ["y6", "x6-y0/6"],
    ["w1", "y1/y5"], ["w2", "y2/y5"], ["w3", "y3/y5"], ["w4", "y4/y5"]
  ],
  "coordinates": {
    "symbols": ["y1", "y2", "y3", "y4", "y5", "y0"],
    "inverse": [["x1", "y1+y0/6"], ["x2", "y2+y0/6"], ["x3", "y3+y0/6"], ["x4", "y4+y0/6"],
                ["x5", "y5+y0/6"], ["x6", "y0/6-y1-y2-y3-y4-y5"]]
  },
  "claims": [
    {"kind": "catalog", "group": "G14", "actions": ["sigma", "tau"], "relabeled": true},
    {"kind": "identity", "lhs": "y1+y2+y3+y4+y5+y6", "rhs": "0"},
    {"kind": "table", "action": "sigma",
     "images": [["y1", "y2"], ["y2", "y3"], ["y3", "y4"], ["y4", "y5"], ["y5", "y1"], ["y6", "y6"], ["y0", "y0"]]},
    {"kind": "table", "action": "tau",
     "images": [["y1", "y6"], ["y2", "y5"], ["y3", "y3"], ["y4", "y4"], ["y5", "y2"], ["y6", "y1"], ["y0", "y0"]]},
    {"kind": "invariance", "symbols": ["y0"], "actions": ["sigma", "tau"]},
    {"kind": "relation", "word": "sigma^5", "on": ["y1", "y2", "y3", "y4", "y5", "y6"]},
    {"kind": "relation", "word": "tau^2", "on": ["y1", "y2", "y3", "y4", "y5", "y6"]},
    {"kind": "cited", "reference": "no-name lemma",
     "statement": "k(y1,...,y5,y0)^G = k(y1,...,y5)^G(y0)"},
    {"kind": "birational", "from": ["y1", "y2", "y3", "y4", "y5"], "to": ["w1", "w2", "w3", "w4", "y5"],
     "inverse": [["y1", "w1*y5"], ["y2", "w2*y5"], ["y3", "w3*y5"], ["y4", "w4*y5"]]},
    {"kind": "table", "action": "sigma", "images": [["y5", "w1*y5"]]},
    {"kind": "table", "action": "tau", "images": [["y5", "w2*y5"]]},
    {"kind": "cited", "reference": "affine action over an invariant subfield",
     "statement": "k(w1,...,w4,y5)^G = k(w1,...,w4)^G(t)"}
  ]
})json";

const std::vector<std::pair<std::string, const char*>>& sources() {
  static const std::vector<std::pair<std::string, const char*>> s{
      {"case1", kCase1},     {"case2", kCase2},     {"case3.1", kCase3_1},
      {"case3.2", kCase3_2}, {"case4.1", kCase4_1}, {"case4.2", kCase4_2},
      {"case5.1", kCase5_1}, {"case5.2", kCase5_2}, {"thm31-step5", kStep5}};
  return s;
}

}  // namespace

const std::vector<std::string>& builtin_case_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& [id, src] : sources()) out.push_back(id);
    return out;
  }();
  return ids;
}

std::string_view builtin_case_source(std::string_view id) {
  for (const auto& [name, src] : sources()) {
    if (name == id) return src;
  }
  throw DomainError("no built-in case script '" + std::string(id) + "'");
}

}  // namespace noether
