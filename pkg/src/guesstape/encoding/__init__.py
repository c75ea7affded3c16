from .primes import (crt_combine, fetch_guess, indexed_guess_fetch, is_prime, iter_primes,
                     kth_prime, placement)
from .tm import (BLANK, SEP, STAR, BudgetExhausted, EncodedConfig, HistoryGuess, SpaceExceeded,
                 TapeConfig, TMError, TMSpec, c_decode, c_encode, direct_step, encode_config,
                 encode_step, initial_encoded, initial_tape_config, read_history_tokens,
                 tm_history_guess)
from .verify import HistoryVerdict, StageReport, choose_m, verify_history_crt, verify_stage
from .walker import DisciplineError, LogSpaceWalker, ModCounter

