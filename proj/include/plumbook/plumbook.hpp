#pragma once

#include "decomposition.hpp"
#include "dsl.hpp"
#include "export.hpp"
#include "fixtures.hpp"
#include "int_matrix.hpp"
#include "mcg.hpp"
#include "open_book.hpp"
#include "plumbing_tree.hpp"
#include "ribbon.hpp"
#include "rollup.hpp"
#include "seifert.hpp"
#include "serialize.hpp"
#include "snf.hpp"
#include "verify.hpp"
