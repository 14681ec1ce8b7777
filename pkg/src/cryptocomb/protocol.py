"""Key agreement from composed knots and their Jones-derived keys.

Secrets are braids whose closures are knots. Parties exchange connected
sums that each hide one secret; both sides end up holding braids for the
same composite knot, so the Jones polynomial (and the integer key derived
from it) agrees. The eavesdropper sees every transmitted braid and can
recover the same key by polynomial division, which is the point of the
attack demonstration: transcripts leak the key to anyone who can divide.

Two-party session, secrets B1, B2 (alice) and B3 (bob):

    alice -> bob   offer     [B1 # B2, B2]
    bob -> alice   response  [B2 # B3]
    alice key: Jones(B1 # (B2 # B3));  bob key: Jones((B1 # B2) # B3)

Multi-party session: the initiator broadcasts a public braid A; every
party i broadcasts B_i # A and combines its own secret with the other
parties' broadcasts, giving each the knot B_1 # ... # B_N # A^(N-1).

Every transmitted braid is first obfuscated with random closure-preserving
moves (fresh seed per message), so the words on the wire differ from the
words composed, without changing any key.
"""
from __future__ import annotations

import json
import random
import struct
from dataclasses import dataclass
from typing import Iterable, Sequence

from .braids import BraidWord, random_knot_braid
from .compose import compose, obfuscate
from .errors import KeyMismatch
from .jones import DEFAULT_STRAND_CAP, derive_key, jones_polynomial
from .laurent import LaurentPoly

_KINDS = ("offer", "response", "broadcast")


@dataclass(frozen=True)
class ProtocolMessage:
    session: str
    seq: int
    sender: str
    kind: str
    braids: tuple[BraidWord, ...]
    recipients: tuple[str, ...] = ()  # derived bookkeeping, not serialized

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise ValueError(f"kind must be one of {_KINDS}")
        object.__setattr__(self, "braids", tuple(self.braids))
        object.__setattr__(self, "recipients", tuple(self.recipients))

    def to_json_obj(self) -> dict:
        return {
            "session": self.session,
            "seq": self.seq,
            "from": self.sender,
            "kind": self.kind,
            "braids": [b.to_json_obj() for b in self.braids],
        }

    @classmethod
    def from_json_obj(cls, obj, recipients: tuple[str, ...] = ()) -> ProtocolMessage:
        return cls(
            session=str(obj["session"]),
            seq=int(obj["seq"]),
            sender=str(obj["from"]),
            kind=str(obj["kind"]),
            braids=tuple(BraidWord.from_json_obj(b) for b in obj["braids"]),
            recipients=recipients,
        )

    def encode(self) -> bytes:
        """Length-prefixed UTF-8 JSON frame (4-byte big-endian length)."""
        body = json.dumps(self.to_json_obj(), separators=(",", ":")).encode("utf-8")
        return struct.pack(">I", len(body)) + body

    @classmethod
    def decode(cls, frame: bytes) -> ProtocolMessage:
        if len(frame) < 4:
            raise ValueError("frame shorter than its length prefix")
        (length,) = struct.unpack(">I", frame[:4])
        if len(frame) != 4 + length:
            raise ValueError(f"frame length {len(frame) - 4} != header {length}")
        return cls.from_json_obj(json.loads(frame[4:].decode("utf-8")))


def decode_frames(data: bytes) -> list[ProtocolMessage]:
    """Split a byte stream of concatenated frames back into messages."""
    out = []
    pos = 0
    while pos < len(data):
        if pos + 4 > len(data):
            raise ValueError("trailing bytes shorter than a length prefix")
        (length,) = struct.unpack(">I", data[pos : pos + 4])
        end = pos + 4 + length
        if end > len(data):
            raise ValueError("frame truncated")
        out.append(ProtocolMessage.decode(data[pos:end]))
        pos = end
    return out


@dataclass(frozen=True)
class SessionOutcome:
    session: str
    keys: dict[str, int]
    polynomials: dict[str, LaurentPoly]
    transcript: tuple[ProtocolMessage, ...]
    frames: tuple[bytes, ...]

    @property
    def shared_key(self) -> int:
        values = set(self.keys.values())
        if len(values) != 1:
            raise KeyMismatch(f"parties disagree: {self.keys}")
        return values.pop()


def _check_agreement(keys: dict[str, int]) -> None:
    if len(set(keys.values())) != 1:
        raise KeyMismatch(f"parties derived different keys: {keys}")


def run_two_party(
    b1: BraidWord,
    b2: BraidWord,
    b3: BraidWord,
    *,
    obfuscation_moves: int = 8,
    seed: int | None = None,
    key_power: int = 3,
    variant: str = "shift",
    session_id: str | None = None,
    strand_cap: int = DEFAULT_STRAND_CAP,
) -> SessionOutcome:
    """Run one two-party session; alice holds (b1, b2), bob holds b3."""
    rng = random.Random(seed)
    session = session_id or f"{rng.getrandbits(64):016x}"

    # Stabilizations grow strand counts, and alice's final braid compounds
    # the growth of b2 and of b2 # b3, so each transmitted braid gets half
    # the slack between the plain composite size and the strand cap.
    plain_final = b1.strands + b2.strands + b3.strands - 2
    headroom = max(0, strand_cap - plain_final) // 2

    def obf(b: BraidWord) -> BraidWord:
        return obfuscate(b, obfuscation_moves, rng.getrandbits(32), b.strands + headroom)

    s1 = compose(b1, b2, variant)
    offer = ProtocolMessage(
        session, 0, "alice", "offer", (obf(s1), obf(b2)), ("bob",)
    )
    sent_s1, sent_b2 = (ProtocolMessage.decode(offer.encode())).braids

    s2 = compose(sent_b2, b3, variant)
    response = ProtocolMessage(session, 1, "bob", "response", (obf(s2),), ("alice",))
    (sent_s2,) = (ProtocolMessage.decode(response.encode())).braids

    alice_final = compose(b1, sent_s2, variant)
    bob_final = compose(sent_s1, b3, variant)
    cap = max(alice_final.strands, bob_final.strands, strand_cap)
    polys = {
        "alice": jones_polynomial(alice_final, strand_cap=cap).polynomial,
        "bob": jones_polynomial(bob_final, strand_cap=cap).polynomial,
    }
    keys = {name: derive_key(p, key_power) for name, p in polys.items()}
    _check_agreement(keys)
    transcript = (offer, response)
    return SessionOutcome(
        session, keys, polys, transcript, tuple(m.encode() for m in transcript)
    )


def run_multi_party(
    initiator_braid: BraidWord,
    party_braids: Sequence[BraidWord],
    *,
    obfuscation_moves: int = 6,
    seed: int | None = None,
    key_power: int = 3,
    variant: str = "shift",
    session_id: str | None = None,
    strand_cap: int = DEFAULT_STRAND_CAP,
) -> SessionOutcome:
    """N-party broadcast session over a shared public braid.

    Each party combines its own secret with the other parties' broadcast
    braids only; its own broadcast is skipped, since the secret itself
    already stands in for it. All parties end at the same composite knot
    B_1 # ... # B_N # A^(N-1).
    """
    if len(party_braids) < 2:
        raise ValueError("need at least two parties")
    rng = random.Random(seed)
    session = session_id or f"{rng.getrandbits(64):016x}"
    names = [f"party{i + 1}" for i in range(len(party_braids))]

    # The public braid is composed into every broadcast, so its growth
    # reaches each final N-1 times; party growths reach it once each.
    others = len(party_braids) - 1
    plain_final = sum(b.strands for b in party_braids) + others * (
        initiator_braid.strands - 2
    )
    headroom = max(0, strand_cap - plain_final) // (2 * others)

    def obf(b: BraidWord) -> BraidWord:
        return obfuscate(b, obfuscation_moves, rng.getrandbits(32), b.strands + headroom)

    transcript: list[ProtocolMessage] = []
    announce = ProtocolMessage(
        session, 0, "initiator", "broadcast", (obf(initiator_braid),), tuple(names)
    )
    transcript.append(announce)
    public_a = ProtocolMessage.decode(announce.encode()).braids[0]

    shared: list[BraidWord] = []
    for i, (name, secret) in enumerate(zip(names, party_braids)):
        msg = ProtocolMessage(
            session,
            i + 1,
            name,
            "broadcast",
            (obf(compose(secret, public_a, variant)),),
            tuple(n for n in names if n != name),
        )
        transcript.append(msg)
        shared.append(ProtocolMessage.decode(msg.encode()).braids[0])

    polys: dict[str, LaurentPoly] = {}
    for i, (name, secret) in enumerate(zip(names, party_braids)):
        final = secret
        for j, broadcast in enumerate(shared):
            if j != i:
                final = compose(final, broadcast, variant)
        cap = max(final.strands, strand_cap)
        polys[name] = jones_polynomial(final, strand_cap=cap).polynomial
    keys = {name: derive_key(p, key_power) for name, p in polys.items()}
    _check_agreement(keys)
    return SessionOutcome(
        session, keys, polys, tuple(transcript), tuple(m.encode() for m in transcript)
    )


@dataclass(frozen=True)
class EveResult:
    polynomial: LaurentPoly
    key: int


def eve_attack(
    transcript: SessionOutcome | Iterable[ProtocolMessage] | bytes,
    key_power: int = 3,
) -> EveResult:
    """Recover the two-party key from transmitted braids alone.

    Jones(B1#B2) * Jones(B2#B3) = Jones(B2) * Jones(shared knot), so one
    exact Laurent division of knot-polynomial products reproduces the key.
    Only public message contents are touched; no party state is used.
    """
    if isinstance(transcript, SessionOutcome):
        messages: Sequence[ProtocolMessage] = transcript.transcript
    elif isinstance(transcript, bytes):
        messages = decode_frames(transcript)
    else:
        messages = list(transcript)
    offer = next(m for m in messages if m.kind == "offer")
    response = next(m for m in messages if m.kind == "response")
    s1, b2 = offer.braids
    (s2,) = response.braids
    cap = max(s1.strands, s2.strands, b2.strands, DEFAULT_STRAND_CAP)
    j_s1 = jones_polynomial(s1, strand_cap=cap).polynomial
    j_s2 = jones_polynomial(s2, strand_cap=cap).polynomial
    j_b2 = jones_polynomial(b2, strand_cap=cap).polynomial
    poly = (j_s1 * j_s2).exact_div(j_b2)
    return EveResult(polynomial=poly, key=derive_key(poly, key_power))


# convenience session builders used by the CLI and the test corpus


def random_two_party_session(
    seed: int,
    *,
    strand_choices: Sequence[int] = (2, 3, 4),
    braid_len: int = 6,
    obfuscation_moves: int = 8,
    key_power: int = 3,
    variant: str = "shift",
) -> SessionOutcome:
    rng = random.Random(seed)
    secrets = [
        random_knot_braid(rng.choice(list(strand_choices)), braid_len, rng)
        for _ in range(3)
    ]
    return run_two_party(
        *secrets,
        obfuscation_moves=obfuscation_moves,
        seed=rng.getrandbits(32),
        key_power=key_power,
        variant=variant,
    )


def random_multi_party_session(
    seed: int,
    parties: int,
    *,
    strand_choices: Sequence[int] = (2, 3),
    braid_len: int = 5,
    obfuscation_moves: int = 6,
    key_power: int = 3,
    variant: str = "shift",
) -> SessionOutcome:
    rng = random.Random(seed)
    initiator = random_knot_braid(2, braid_len, rng)
    secrets = [
        random_knot_braid(rng.choice(list(strand_choices)), braid_len, rng)
        for _ in range(parties)
    ]
    return run_multi_party(
        initiator,
        secrets,
        obfuscation_moves=obfuscation_moves,
        seed=rng.getrandbits(32),
        key_power=key_power,
        variant=variant,
    )
