# A fixed automaton recognizing a tally language chosen by the tape's edge marking.
from guesstape import run
from guesstape.constructions import perversed_tally_recognizer, tally_omega
from guesstape.encoding import is_prime

omega = tally_omega(is_prime, 64)
rec = perversed_tally_recognizer(omega)
print("marking prefix:", omega[:24], "...")
print("automaton states:", len(rec.spec.states))

for n in range(1, 21):
    outcome, _ = run(rec.spec, rec.model, rec.guess(n), "1" * n, 10_000)
    verdict = "accept" if outcome.accepted else "reject"
    print(f"1^{n:<2} member={is_prime(n)!s:<5} {verdict}")
