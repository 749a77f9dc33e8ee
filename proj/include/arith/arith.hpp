#pragma once

#include "arith/combinatorics.hpp"
#include "arith/digits.hpp"
#include "arith/divisibility.hpp"
#include "arith/dsl/ast.hpp"
#include "arith/dsl/check.hpp"
#include "arith/dsl/eval.hpp"
#include "arith/dsl/parser.hpp"
#include "arith/dsl/printer.hpp"
#include "arith/dsl/worksheet.hpp"
#include "arith/int.hpp"
#include "arith/primality.hpp"
#include "arith/residue.hpp"
