import logging

import numpy as np

from sieves.errors import ContractError
from sieves.management.base import SieveCommand
from sieves.util.pdf import recurrence_run
from sieves.util.series import count_series
from sieves.util.sieve import segmented_sieve, write_bitmap, write_primes

logger = logging.getLogger(__name__)


class Command(SieveCommand):
    help = ("Lists the primes up to --n, or the prime counts at checkpoints when "
            "--checkpoints/--auto/--k is given.")
    required_options = ('n',)

    def add_arguments(self, parser):
        parser.add_argument('--n', type=int, required=True, help="upper bound, >= 2")
        self.add_checkpoint_arguments(parser)
        parser.add_argument('--k', type=int, help="add the k-prime PDF count pi_k as a column")
        parser.add_argument('--method', choices=('sieve', 'recurrence'), default='sieve',
                            help="segmented sieve, or the self-charging PDF recurrence")
        parser.add_argument('--export-bitmap', dest='export_bitmap',
                            help="also write the raw primality bitmap to this path")
        super(Command, self).add_arguments(parser)

    def run(self, config, options):
        n = config.n_max
        table = bool(options.get('checkpoints') or options.get('auto') or config.k)

        bitmap = None
        if options['method'] == 'recurrence':
            primes = np.array(recurrence_run(n).primes, dtype=np.int64)
        else:
            bitmap = segmented_sieve(n, config.segment_size, config.threads)
            primes = None

        if options.get('export_bitmap'):
            if bitmap is None:
                bitmap = segmented_sieve(n, config.segment_size, config.threads)
            with open(options['export_bitmap'], 'wb') as fh:
                write_bitmap(bitmap, fh)
            logger.info("bitmap 0..%d written to %s", n, options['export_bitmap'])

        if not table:
            if options.get('save'):
                raise ContractError("--save stores count tables; add --checkpoints or --auto")
            self.list_primes(config, bitmap, primes)
            return None, None

        if primes is not None:
            counts = [int(np.searchsorted(primes, point, side='right')) for point in config.checkpoints]
        else:
            counts = [count for _, count in count_series('pi', {}, config.checkpoints, bitmap=bitmap).checkpoints]

        header = ['n', 'pi']
        rows = [[point, count] for point, count in zip(config.checkpoints, counts)]
        if config.k:
            partial = count_series('pi_k', {'k': config.k}, config.checkpoints,
                                   threads=config.threads, segment_size=config.segment_size)
            header.append('pi_k')
            for row, (_, count) in zip(rows, partial.checkpoints):
                row.append(count)
        return header, rows

    def list_primes(self, config, bitmap, primes):
        out = self.open_output(config) or self.stdout
        try:
            if bitmap is not None:
                write_primes(bitmap, out)
            elif primes.size:
                out.write('\n'.join(map(str, primes.tolist())) + '\n')
        finally:
            if out is not self.stdout:
                out.close()
