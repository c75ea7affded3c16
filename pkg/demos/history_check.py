# A Turing machine run written out as a guess, and checked one modulus at a time.
from guesstape.encoding import choose_m, tm_history_guess, verify_history_crt
from guesstape.encoding.tm import STAR, HistoryGuess
from guesstape.samples import HAND_TMS

tm = HAND_TMS["flip-check"]
s, word = 3, "0"
guess, accepted = tm_history_guess(tm, word, s)
m = choose_m(s)
print(f"space {s}, input {word!r}: {len(guess.configs)} blocks, {len(guess.tokens)} cells, accepted={accepted}")
for c in guess.configs:
    print(f"  cl={c.cl} q={c.q} a={c.a} cr={c.cr}")

verdict = verify_history_crt(tm, word, s, m, guess.content())
print(" ".join(str(r) for r in verdict.stages), "->", "ACCEPT" if verdict else "REJECT")

# one extra star in the second block's left code
i = len(guess.tokens) // 2
while guess.tokens[i] != STAR:
    i += 1
forged = HistoryGuess(guess.configs, guess.tokens[:i] + (STAR,) + guess.tokens[i:])
verdict = verify_history_crt(tm, word, s, m, forged.content())
print("with one star more:", [str(r) for r in verdict.stages if not r.ok][:2])
