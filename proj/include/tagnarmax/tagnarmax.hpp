#pragma once

#include "tagnarmax/error.hpp"
#include "tagnarmax/gen/enumerate.hpp"
#include "tagnarmax/gen/sample.hpp"
#include "tagnarmax/model/classify.hpp"
#include "tagnarmax/model/model.hpp"
#include "tagnarmax/model/nbj.hpp"
#include "tagnarmax/model/simulate.hpp"
#include "tagnarmax/model/text.hpp"
#include "tagnarmax/narmax/algorithm.hpp"
#include "tagnarmax/narmax/gn.hpp"
#include "tagnarmax/narmax/nbj.hpp"
#include "tagnarmax/narmax/yield.hpp"
#include "tagnarmax/tag/derivation.hpp"
#include "tagnarmax/tag/gorn_address.hpp"
#include "tagnarmax/tag/grammar.hpp"
#include "tagnarmax/tag/text.hpp"
#include "tagnarmax/tag/tree.hpp"
