from django.core.management.base import BaseCommand, CommandError

from sieves.errors import EXIT_USAGE, SieveError
from sieves.util import db
from sieves.util.report import FORMATS, format_rows, write_table


class Command(BaseCommand):
    help = "Lists, shows or deletes tables archived with --save."

    def add_arguments(self, parser):
        group = parser.add_mutually_exclusive_group()
        group.add_argument('--show', type=int, metavar='ID', help="write the stored table of run ID")
        group.add_argument('--delete', type=int, metavar='ID', help="remove run ID from the archive")
        parser.add_argument('--limit', type=int, help="list at most this many runs")
        parser.add_argument('--format', choices=FORMATS,
                            help="output format (default: the format the run was emitted in)")

    def handle(self, *args, **options):
        try:
            if options.get('show') is not None:
                self.show(options['show'], options.get('format'))
            elif options.get('delete') is not None:
                if not db.delete_run(options['delete']):
                    raise CommandError("no archived run with id %d" % options['delete'], returncode=EXIT_USAGE)
                self.stderr.write("deleted run %d" % options['delete'])
            else:
                self.list_runs(options.get('limit'), options.get('format') or 'text')
        except SieveError as e:
            raise CommandError(str(e), returncode=e.exit_code)

    def show(self, run_id, output_format):
        run, header, rows = db.get_run_rows(run_id)
        write_table(header, rows, self.stdout, output_format or run.output_format)

    def list_runs(self, limit, output_format):
        rows = [[run.run_id, run.command, run.created.strftime('%Y-%m-%d %H:%M:%S'), run.row_count, run.parameters]
                for run in db.get_runs(limit)]
        write_table(['id', 'command', 'created', 'rows', 'parameters'], format_rows(rows), self.stdout, output_format)
