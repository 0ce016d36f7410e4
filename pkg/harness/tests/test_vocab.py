from lambda_harness.vocab import BOS, EOS, PAD, UNK, Vocabulary


def test_vocabulary_from_training_pairs_only():
    vocab = Vocabulary.from_pairs([("L a a", "a"), ("@ a b", "@ b a")])
    assert vocab.tokens[:4] == ["<pad>", "<bos>", "<eos>", "<unk>"]
    assert set(vocab.tokens[4:]) == {"L", "@", "a", "b"}


def test_stable_ordering():
    a = Vocabulary.from_pairs([("L a a", "b c")])
    b = Vocabulary.from_pairs([("b c", "a L a")])
    assert a.tokens == b.tokens


def test_encode_decode_roundtrip():
    vocab = Vocabulary.from_pairs([("L x @ x y", "L x x")])
    text = "L x @ x y"
    assert vocab.decode(vocab.encode(text)) == text
    framed = vocab.encode(text, frame=True)
    assert framed[0] == BOS and framed[-1] == EOS
    assert vocab.decode(framed) == text


def test_unknown_tokens_map_to_unk_and_count():
    vocab = Vocabulary.from_pairs([("L a a", "a")])
    before = vocab.unk_seen
    ids = vocab.encode("L z z")
    assert ids.count(UNK) == 2
    assert vocab.unk_seen == before + 2


def test_no_unk_on_own_training_data():
    pairs = [("L a @ a b", "L c c"), ("@ a b", "b")]
    vocab = Vocabulary.from_pairs(pairs)
    for inp, tgt in pairs:
        vocab.encode(inp)
        vocab.encode(tgt, frame=True)
    assert vocab.unk_seen == 0


def test_decode_stops_at_eos_and_skips_pad():
    vocab = Vocabulary.from_pairs([("a b", "a")])
    a = vocab.index["a"]
    b = vocab.index["b"]
    assert vocab.decode([BOS, a, b, EOS, a, a]) == "a b"
    assert vocab.decode([a, PAD, PAD]) == "a"
