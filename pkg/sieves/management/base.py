'''
    Shared plumbing of the sieve commands: option validation, error
    translation to exit codes, table output and archiving.
'''

import logging

from django.core.management.base import BaseCommand, CommandError

from sieves.errors import EXIT_USAGE, SieveError
from sieves.forms import RunConfigForm
from sieves.util import db
from sieves.util.report import FORMATS, format_rows, write_table

logger = logging.getLogger(__name__)

FORM_OPTIONS = ('n', 'k', 'gap', 'checkpoints', 'auto', 'format', 'output', 'segment_size', 'threads')


class SieveCommand(BaseCommand):
    '''
        A command validates its options into a RunConfig through
        RunConfigForm, builds a table in `run` and writes it.

        Library errors leave as CommandError carrying the exit code of the
        exception class: 2 usage, 3 resource limit, 4 invariant violation.
    '''

    # form fields the command cannot do without
    required_options = ()

    def add_arguments(self, parser):
        parser.add_argument('--format', choices=FORMATS, help="output format (default csv)")
        parser.add_argument('--output', help="write the table to this path instead of stdout")
        parser.add_argument('--segment-size', dest='segment_size', type=int,
                            help="integers per sieve segment")
        parser.add_argument('--threads', type=int,
                            help="sieve worker threads (default: PDFSIEVE_THREADS, then SIEVE_THREADS)")
        parser.add_argument('--save', action='store_true', help="store the emitted table in the run archive")

    def add_checkpoint_arguments(self, parser):
        parser.add_argument('--checkpoints', help="comma separated n values, e.g. 1000,10000")
        parser.add_argument('--auto', action='store_true',
                            help="decades 10^3 .. n as checkpoints")

    def handle(self, *args, **options):
        if options.get('verbosity', 1) >= 2:
            logging.getLogger('sieves').setLevel(logging.DEBUG)

        data = {name: options.get(name) for name in FORM_OPTIONS}
        form = RunConfigForm(data, required=self.required_options)
        if not form.is_valid():
            raise CommandError(form.errors_text(), returncode=EXIT_USAGE)
        config = form.to_config(self.command_name)

        try:
            header, rows = self.run(config, options)
        except SieveError as e:
            logger.debug("%s failed: %s", config.command, e)
            raise CommandError(str(e), returncode=e.exit_code)

        if rows is not None:
            self.emit(config, header, format_rows(rows))
            if options.get('save'):
                self.archive(config, header, rows)

    @property
    def command_name(self):
        return self.__module__.rsplit('.', 1)[-1]

    def run(self, config, options):
        '''
            Returns (header, rows), or (None, None) when the command already
            wrote its own output.
        '''
        raise NotImplementedError('subclasses of SieveCommand must provide a run() method')

    def open_output(self, config):
        if config.output:
            return open(config.output, 'w', newline='', encoding='utf-8')
        return None

    def emit(self, config, header, cells):
        out = self.open_output(config)
        if out is None:
            write_table(header, cells, self.stdout, config.output_format)
            return
        with out:
            write_table(header, cells, out, config.output_format)

    def archive(self, config, header, rows):
        run_id = db.save_run(config.command, config.as_dict(), header, rows, config.output_format)
        self.stderr.write("saved as run %d" % run_id)
