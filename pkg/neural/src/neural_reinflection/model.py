"""Character-level encoder-decoder with additive attention.

A bidirectional LSTM encodes the input token sequence; an LSTM decoder
attends over the encoder states with an MLP (additive) scorer and emits the
target form one character at a time.  Greedy decoding; sizes default to 100
throughout.
"""

from __future__ import annotations

import torch
from torch import nn


class Seq2SeqAttention(nn.Module):
    def __init__(
        self,
        vocab_size: int,
        embedding_size: int = 100,
        hidden_size: int = 100,
        attention_size: int = 100,
        lstm_layers: int = 1,
    ):
        super().__init__()
        if hidden_size % 2:
            raise ValueError("hidden_size must be even (bidirectional encoder)")
        self.hidden_size = hidden_size
        self.lstm_layers = lstm_layers
        self.embedding = nn.Embedding(vocab_size, embedding_size, padding_idx=0)
        self.encoder = nn.LSTM(
            embedding_size,
            hidden_size // 2,
            num_layers=lstm_layers,
            bidirectional=True,
            batch_first=True,
        )
        self.decoder = nn.LSTM(
            embedding_size + hidden_size,
            hidden_size,
            num_layers=lstm_layers,
            batch_first=True,
        )
        self.attn_enc = nn.Linear(hidden_size, attention_size)
        self.attn_dec = nn.Linear(hidden_size, attention_size)
        self.attn_score = nn.Linear(attention_size, 1, bias=False)
        self.out = nn.Linear(hidden_size * 2, vocab_size)

    # -- encoding -----------------------------------------------------------

    def encode(self, src: torch.Tensor, src_lengths: torch.Tensor):
        """Returns (encoder outputs, padding mask, initial decoder state)."""
        embedded = self.embedding(src)
        packed = nn.utils.rnn.pack_padded_sequence(
            embedded, src_lengths, batch_first=True, enforce_sorted=False
        )
        outputs, (h, c) = self.encoder(packed)
        outputs, _ = nn.utils.rnn.pad_packed_sequence(
            outputs, batch_first=True, total_length=src.size(1)
        )
        mask = torch.arange(src.size(1))[None, :] < src_lengths[:, None]
        # Merge forward/backward finals per layer into the decoder state.
        batch = src.size(0)
        h = h.view(self.lstm_layers, 2, batch, -1)
        c = c.view(self.lstm_layers, 2, batch, -1)
        state = (
            torch.cat([h[:, 0], h[:, 1]], dim=-1).contiguous(),
            torch.cat([c[:, 0], c[:, 1]], dim=-1).contiguous(),
        )
        return outputs, mask, state

    def _attend(self, enc_proj, enc_outputs, mask, dec_hidden):
        scores = self.attn_score(
            torch.tanh(enc_proj + self.attn_dec(dec_hidden).unsqueeze(1))
        ).squeeze(-1)
        scores = scores.masked_fill(~mask, float("-inf"))
        weights = torch.softmax(scores, dim=-1)
        return torch.bmm(weights.unsqueeze(1), enc_outputs).squeeze(1)

    def _step(self, tokens, state, enc_proj, enc_outputs, mask):
        context = self._attend(enc_proj, enc_outputs, mask, state[0][-1])
        rnn_in = torch.cat([self.embedding(tokens), context], dim=-1).unsqueeze(1)
        output, state = self.decoder(rnn_in, state)
        logits = self.out(torch.cat([output.squeeze(1), context], dim=-1))
        return logits, state

    # -- training and decoding ----------------------------------------------

    def forward(self, src, src_lengths, dec_inputs):
        """Teacher-forced logits over every target position."""
        enc_outputs, mask, state = self.encode(src, src_lengths)
        enc_proj = self.attn_enc(enc_outputs)
        logits = []
        for t in range(dec_inputs.size(1)):
            step_logits, state = self._step(
                dec_inputs[:, t], state, enc_proj, enc_outputs, mask
            )
            logits.append(step_logits)
        return torch.stack(logits, dim=1)

    @torch.no_grad()
    def greedy_decode(self, src, src_lengths, sos: int, eos: int, max_len: int):
        enc_outputs, mask, state = self.encode(src, src_lengths)
        enc_proj = self.attn_enc(enc_outputs)
        batch = src.size(0)
        tokens = torch.full((batch,), sos, dtype=torch.long)
        finished = torch.zeros(batch, dtype=torch.bool)
        outputs = []
        for _ in range(max_len):
            logits, state = self._step(tokens, state, enc_proj, enc_outputs, mask)
            tokens = logits.argmax(dim=-1)
            outputs.append(tokens)
            finished |= tokens == eos
            if bool(finished.all()):
                break
        if not outputs:
            return torch.empty((batch, 0), dtype=torch.long)
        return torch.stack(outputs, dim=1)
