'''
    Run archive operations.
'''

import json
import logging
from datetime import datetime, timezone

from sqlalchemy.orm.exc import NoResultFound

import sieves.models as models
import sieves.util.db_init as db_init
from sieves.errors import ContractError
from sieves.util.report import format_rows

logger = logging.getLogger(__name__)


def save_run(command, parameters, header, rows, output_format='csv'):
	'''
		Stores an emitted table.

		:param command: name of the management command
		:param parameters: JSON-serializable dict of the run configuration
		:param header: column names
		:param rows: table rows, raw values or formatted strings
		:return: id of the new run
	'''
	data_connection = db_init.connection()
	db_session = data_connection.new_session()

	cells = format_rows(rows)
	run = models.Run(command=command, created=datetime.now(timezone.utc),
		parameters=json.dumps(parameters, sort_keys=True), output_format=output_format,
		header=json.dumps(list(header)), row_count=len(cells))
	run.rows = [models.RunRow(ordinal=i, cells=json.dumps(row)) for i, row in enumerate(cells)]
	db_session.add(run)
	db_session.commit()

	logger.info("archived %s run %d with %d rows", command, run.run_id, len(cells))
	return run.run_id


def get_runs(limit=None):
	'''
		Archived runs, newest first.
	'''
	db_session = db_init.connection().new_session()
	query = db_session.query(models.Run).order_by(models.Run.run_id.desc())
	if limit is not None:
		query = query.limit(limit)
	return query.all()


def get_run(run_id):
	db_session = db_init.connection().new_session()
	try:
		return db_session.query(models.Run).filter(models.Run.run_id == run_id).one()
	except NoResultFound:
		raise ContractError("no archived run with id %d" % run_id)


def get_run_rows(run_id):
	'''
		Stored table of a run.

		:return: (run, header, rows) with rows as lists of formatted cells
	'''
	run = get_run(run_id)
	rows = [json.loads(row.cells) for row in run.rows]
	return run, json.loads(run.header), rows


def delete_run(run_id):
	'''
		Removes a run and its rows. Returns False when there was no such run.
	'''
	db_session = db_init.connection().new_session()
	run = db_session.query(models.Run).filter(models.Run.run_id == run_id).first()
	if run is None:
		return False

	# rows go with the run through the relationship cascade
	db_session.delete(run)
	db_session.commit()
	return True
