#pragma once

#include "opsem/automata/dfa.hpp"
#include "opsem/automata/nfa.hpp"
#include "opsem/ccs/context.hpp"
#include "opsem/ccs/equiv.hpp"
#include "opsem/ccs/parse.hpp"
#include "opsem/ccs/process.hpp"
#include "opsem/ccs/semantics.hpp"
#include "opsem/core/aut.hpp"
#include "opsem/core/error.hpp"
#include "opsem/core/gen.hpp"
#include "opsem/core/lts.hpp"
#include "opsem/core/verdict.hpp"
#include "opsem/eq/bisim.hpp"
#include "opsem/eq/relation.hpp"
#include "opsem/eq/similarity.hpp"
#include "opsem/eq/traces.hpp"
#include "opsem/eq/upto.hpp"
#include "opsem/eq/weak.hpp"
#include "opsem/lambda/atom.hpp"
#include "opsem/lambda/ctx.hpp"
#include "opsem/lambda/eval.hpp"
#include "opsem/lambda/fsub.hpp"
#include "opsem/lambda/parse.hpp"
#include "opsem/lambda/stlc.hpp"
#include "opsem/lambda/term.hpp"
#include "opsem/lambda/types.hpp"
